"""Node polynomials T_delta(d), thresholds, and the exp/log structure.

T_delta is the degree-2delta polynomial that equals N^{d,delta} for all
large d.  It is fitted by exact interpolation inside the proven
polynomial regime and never assumed below it; the threshold scan finds
where agreement actually starts.  The log of the generating function
sum_delta T_delta(d) u^delta collapses to quadratics in d, which is the
structure the Bell-polynomial reconstruction inverts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .engine import CacheStore, severi_degree
from .series import RatSeries, Scalar


class DegreeCheckFailed(RuntimeError):
    """The fitted polynomial missed the held-out guard point."""


class NotQuadratic(RuntimeError):
    """A log-form coefficient failed to collapse to degree <= 2 in d."""


class InvalidInvariants(ValueError):
    """(x, y, z, t) violates z + t = 0 (mod 12) or x = y (mod 2)."""


def interpolate(xs: Sequence[int], ys: Sequence[Scalar]) -> tuple[Fraction, ...]:
    """Exact polynomial through (xs[i], ys[i]), as monomial coefficients.

    Newton divided differences expanded to the monomial basis, lowest
    degree first.  Data is exact, so no least squares: len(xs) points
    determine the unique polynomial of degree < len(xs).
    """
    n = len(xs)
    if n == 0 or n != len(ys):
        raise ValueError("interpolation needs matching nonempty samples")
    if len(set(xs)) != n:
        raise ValueError("interpolation nodes must be distinct")
    dd = [Fraction(y) for y in ys]
    # dd[i] becomes the order-i divided difference f[x_0..x_i]
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level])
    coeffs = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        # multiply by (x - xs[i]) and add dd[i]
        carry = Fraction(0)
        for j in range(n):
            coeffs[j], carry = carry - xs[i] * coeffs[j], coeffs[j]
        coeffs[0] += dd[i]
    return tuple(coeffs)


def _poly_eval(coeffs: Sequence[Fraction], d: int) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * d + c
    return acc


@dataclass(frozen=True)
class NodePolynomial:
    """T_delta with its fit window and guard-point status."""

    delta: int
    coeffs: tuple[Fraction, ...]  # lowest degree first, length 2*delta + 1
    fit_range: tuple[int, ...]
    verified_extra: bool

    def __call__(self, d: int) -> Fraction:
        return _poly_eval(self.coeffs, d)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


def evaluate(p: NodePolynomial, d: int) -> Fraction:
    """Horner evaluation of a fitted polynomial."""
    return p(d)


def fit_node_polynomial(delta: int, cache: CacheStore | None = None) -> NodePolynomial:
    """Interpolate N^{d,delta} at d = delta+2 .. 3delta+2, guard at 3delta+3.

    The window sits inside the proven polynomial regime, so the fit does
    not presuppose the conjectured threshold.
    """
    if delta < 0:
        raise ValueError("node count must be nonnegative")
    xs = tuple(range(delta + 2, 3 * delta + 3))
    ys = [severi_degree(d, delta, cache=cache) for d in xs]
    coeffs = interpolate(xs, ys)
    guard = 3 * delta + 3
    predicted = _poly_eval(coeffs, guard)
    actual = severi_degree(guard, delta, cache=cache)
    if predicted != actual:
        raise DegreeCheckFailed(
            f"T_{delta}({guard}) = {predicted} but the count is {actual}"
        )
    if delta >= 1 and coeffs[-1] == 0:
        raise DegreeCheckFailed(f"T_{delta} degenerated below degree {2 * delta}")
    return NodePolynomial(
        delta=delta, coeffs=coeffs, fit_range=xs, verified_extra=True
    )


class ThresholdWitness(NamedTuple):
    d: int
    predicted: Fraction
    actual: int


@dataclass(frozen=True)
class ThresholdResult:
    delta: int
    threshold: int
    witness: ThresholdWitness | None  # the mismatch at threshold - 1


def threshold_report(delta: int, cache: CacheStore | None = None) -> ThresholdResult:
    """Least d* with T_delta(d) = N^{d,delta} on all of [d*, 3delta+3].

    Scans downward from the fit window so that accidental agreement
    below a gap does not shrink the answer.
    """
    if delta < 1:
        raise ValueError("threshold needs delta >= 1")
    poly = fit_node_polynomial(delta, cache=cache)
    top = 3 * delta + 3
    least = top + 1
    witness = None
    for d in range(top, 0, -1):
        predicted = poly(d)
        actual = severi_degree(d, delta, cache=cache)
        if predicted == actual:
            least = d
        else:
            witness = ThresholdWitness(d, predicted, actual)
            break
    return ThresholdResult(delta=delta, threshold=least, witness=witness)


def threshold(delta: int, cache: CacheStore | None = None) -> int:
    return threshold_report(delta, cache=cache).threshold


@dataclass(frozen=True)
class LogForm:
    """q_kappa(d) = a2.d^2 + a1.d + a0, the plane shadow of a linear form."""

    kappa: int
    a2: Fraction
    a1: Fraction
    a0: Fraction

    def __call__(self, d: int) -> Fraction:
        return (self.a2 * d + self.a1) * d + self.a0


def log_forms(delta_max: int, cache: CacheStore | None = None) -> list[LogForm]:
    """The forms q_kappa(d) = kappa! [u^kappa] log sum_delta T_delta(d) u^delta.

    Each coefficient of the log is a priori a polynomial of degree up to
    2.kappa in d; it is interpolated at enough points to resolve that
    degree, and everything above degree 2 must vanish exactly.
    """
    if delta_max < 1:
        raise ValueError("log forms need delta_max >= 1")
    polys = [fit_node_polynomial(delta, cache=cache) for delta in range(delta_max + 1)]
    npoints = max(4, 2 * delta_max + 1)
    ds = range(delta_max + 2, delta_max + 2 + npoints)
    logs = {}
    for d in ds:
        gen = RatSeries([p(d) for p in polys])  # in u, constant term T_0 = 1
        logs[d] = gen.log()
    out = []
    for kappa in range(1, delta_max + 1):
        factor = math.factorial(kappa)
        values = [factor * logs[d][kappa] for d in ds]
        coeffs = interpolate(tuple(ds), values)
        for power in range(3, len(coeffs)):
            if coeffs[power] != 0:
                raise NotQuadratic(
                    f"q_{kappa} has a nonzero d^{power} coefficient: {coeffs[power]}"
                )
        a0, a1, a2 = (list(coeffs) + [Fraction(0)] * 3)[:3]
        out.append(LogForm(kappa=kappa, a2=a2, a1=a1, a0=a0))
    return out


def bell_polynomial(delta: int, a: Sequence[Scalar]) -> Fraction:
    """Complete Bell polynomial P_delta = delta! [u^delta] exp(sum a_k u^k/k!)."""
    if delta < 0:
        raise ValueError("node count must be nonnegative")
    if len(a) < delta:
        raise ValueError(f"P_{delta} needs {delta} arguments, got {len(a)}")
    if delta == 0:
        return Fraction(1)
    inner = RatSeries(
        [0] + [Fraction(a[k - 1]) / math.factorial(k) for k in range(1, delta + 1)]
    )
    return inner.exp()[delta] * math.factorial(delta)


def reconstruct_from_log_forms(
    delta_max: int, d: int, forms: Sequence[LogForm]
) -> list[Fraction]:
    """n_delta = P_delta(q_1(d), ..., q_delta(d))/delta! for delta <= delta_max.

    Equals [u^delta] exp(sum q_kappa(d) u^kappa/kappa!), which must
    reproduce the node-polynomial values T_delta(d).
    """
    if len(forms) < delta_max:
        raise ValueError("forms must cover every kappa <= delta_max")
    by_kappa = {f.kappa: f for f in forms}
    inner = RatSeries(
        [0]
        + [by_kappa[k](d) / math.factorial(k) for k in range(1, delta_max + 1)]
    )
    return list(inner.exp().coeffs)


@dataclass(frozen=True)
class Invariants:
    """(x, y, z, t) = (L.L, L.K, K.K, c2) for a line bundle L on a surface."""

    x: int
    y: int
    z: int
    t: int

    def is_valid(self) -> bool:
        return (self.z + self.t) % 12 == 0 and (self.x - self.y) % 2 == 0

    @property
    def nu(self) -> int:
        if (self.z + self.t) % 12 != 0:
            raise InvalidInvariants(f"z + t = {self.z + self.t} is not divisible by 12")
        return (self.z + self.t) // 12

    @property
    def chi(self) -> int:
        if (self.x - self.y) % 2 != 0:
            raise InvalidInvariants(f"x - y = {self.x - self.y} is odd")
        return (self.x - self.y) // 2 + self.nu


def plane_invariants(d: int) -> Invariants:
    """Degree-d plane curves: (d^2, -3d, 9, 3), so nu = 1, chi = (d^2+3d)/2 + 1."""
    if d < 1:
        raise ValueError("degree must be positive")
    return Invariants(x=d * d, y=-3 * d, z=9, t=3)
