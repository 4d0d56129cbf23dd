"""The generating function of node polynomials is an exponential.

log sum_delta T_delta(d) u^delta has u^kappa coefficient q_kappa(d)/kappa!
where each q_kappa is a plain quadratic in d, with integer leading
coefficient and the other two divisible by 3.  Exponentiating the
quadratics back recovers every T_delta(d) through complete Bell
polynomials: compressing degree-2*delta polynomials into triples.
"""

from __future__ import annotations

from severi import (
    bell_polynomial,
    fit_node_polynomial,
    log_forms,
    reconstruct_from_log_forms,
)


def main() -> None:
    delta_max = 5
    forms = log_forms(delta_max)
    print("Quadratic forms q_kappa(d) = A d^2 + B d + C in the log:")
    for f in forms:
        print(f"  q_{f.kappa}(d) = {f.a2} d^2 {'+' if f.a1 >= 0 else '-'} "
              f"{abs(f.a1)} d {'+' if f.a0 >= 0 else '-'} {abs(f.a0)}")
    print("  pattern: A integral, B and C divisible by 3, every kappa")

    print()
    print("Exponentiating the quadratics rebuilds the node polynomials.")
    print("At d = 10:")
    polys = [fit_node_polynomial(k) for k in range(delta_max + 1)]
    rebuilt = reconstruct_from_log_forms(delta_max, 10, forms)
    for delta, (direct, via_log) in enumerate(zip((p(10) for p in polys), rebuilt)):
        print(f"  delta = {delta}: T_{delta}(10) = {str(direct):>12}  "
              f"from Bell structure: {str(via_log):>12}")

    print()
    print("The Bell polynomial P_delta sums over set partitions; with all")
    print("arguments 1 it counts them (Bell numbers):")
    values = [int(bell_polynomial(k, [1] * k)) for k in range(8)]
    print(f"  P_0..P_7 at (1,...,1): {values}")

    print()
    print("Leading coefficient of T_delta is A_1^delta/delta! = 3^delta/delta!:")
    for delta in range(1, 6):
        print(f"  delta = {delta}: [d^{2 * delta}] T_{delta} = {polys[delta].coeffs[-1]}")


if __name__ == "__main__":
    main()
