"""The fixed power series that drive the closed-form count predictions.

u(q) has coefficients n.sigma1(n); B3 = u/q; Delta is the discriminant
cusp form, and B4 couples Delta with the second derivative of the
weight-2 Eisenstein sum.  Everything is exact: coefficients are
integers produced by integer convolutions, no floats anywhere.
"""

from __future__ import annotations

from severi import RatSeries, form_catalog, sigma1


def show(name: str, series: RatSeries, terms: int) -> None:
    coeffs = [str(series[m]) for m in range(terms)]
    print(f"  {name:<8} {', '.join(coeffs)}, ...")


def main() -> None:
    order = 12
    cat = form_catalog(order)
    print(f"Coefficients through q^{7}:")
    show("u", cat.u, 8)
    show("B3", cat.b3, 8)
    show("B4", cat.b4, 8)
    show("Delta", cat.delta_form, 8)

    print()
    print("u is the logarithmic q-derivative structure D(G2):")
    for n in (1, 2, 3, 6, 12):
        print(f"  [q^{n}] u = n.sigma1(n) = {n}.{sigma1(n)} = {cat.u[n]}")

    print()
    shifted = RatSeries([0, *cat.b3.coeffs[:-1]])
    print(f"u = q.B3 holds identically at order {order}: {cat.u == shifted}")

    print()
    print("Delta via the 24th power of the Euler product; its coefficients")
    print("are the tau values, and B4's expansion starts 1 - 12q:")
    print(f"  tau(1..6)  = {[int(cat.delta_form[n]) for n in range(1, 7)]}")
    print(f"  B4 through q^6 = {[int(cat.b4[m]) for m in range(7)]}")


if __name__ == "__main__":
    main()
