"""Count nodal plane curves, absolutely and relative to a line.

N^{d,delta} is the number of degree-d curves with delta nodes through
d(d+3)/2 - delta general points.  The relative variant prescribes
tangencies with a fixed line: alpha counts conditions at chosen points,
beta at unassigned ones.
"""

from __future__ import annotations

import math

from severi import relative_severi, severi_degree, severi_table


def main() -> None:
    print("Severi degrees N^{d,delta} for d <= 6, delta <= 4:")
    rows = severi_table(6, 4)
    header = ["d\\delta"] + [str(k) for k in range(5)]
    print("  " + "  ".join(f"{h:>10}" for h in header))
    for d, row in enumerate(rows, start=1):
        cells = [f"{d:>10}"] + [f"{v:>10}" for v in row]
        print("  " + "  ".join(cells))

    print()
    print("Classical anchors:")
    print(f"  2 conics through 4 points tangent to a line: "
          f"{relative_severi(2, 0, (), (0, 1))}")
    print(f"  12 singular cubics in a general pencil:      {severi_degree(3, 1)}")
    print(f"  675 rational quartics through 11 points:      {severi_degree(4, 3)}")

    print()
    print("A curve of degree d has at most d(d-1)/2 nodes; at the maximum")
    print("it splits into d lines, counted by a perfect-matching factorial:")
    for d in range(2, 7):
        delta = d * (d - 1) // 2
        count = severi_degree(d, delta)
        formula = math.factorial(2 * d) // (2**d * math.factorial(d))
        print(f"  d = {d}: N^{{{d},{delta}}} = {count}  (= (2d)!/(2^d d!) = {formula})")

    print()
    print("Relative counts with tangency conditions of higher order:")
    print(f"  N^{{4,1}}(alpha=(1), beta=(3))     = {relative_severi(4, 1, (1,), (3,))}")
    print(f"  N^{{4,1}}(alpha=(0,2), beta=())    = {relative_severi(4, 1, (0, 2), ())}")
    print(f"  N^{{5,2}}(alpha=(), beta=(1,2))    = {relative_severi(5, 2, (), (1, 2))}")


if __name__ == "__main__":
    main()
