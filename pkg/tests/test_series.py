"""Series kernel: frozen examples, independent oracles, random properties."""

import random
from fractions import Fraction as F

import pytest

from severi import (
    ConstantTermNotOne,
    NonzeroConstantTerm,
    NotReversible,
    PositiveValuationRequired,
    RatSeries,
    ZeroConstantTerm,
)


def series(*cs):
    return RatSeries(cs)


# -- independent oracles -------------------------------------------------

def exp_by_partial_sums(a: RatSeries) -> RatSeries:
    """sum_k a^k / k!, using only mul/add; k > order contributes nothing."""
    total = RatSeries.one(a.order)
    term = RatSeries.one(a.order)
    for k in range(1, a.order + 1):
        term = term * a
        total = total + term * F(1, __import__("math").factorial(k))
    return total


def revert_by_lagrange(g: RatSeries) -> RatSeries:
    """Lagrange inversion: n.[q^n] g^(-1) = [q^(n-1)] (q/g)^n."""
    M = g.order
    base = RatSeries(g.coeffs[1:]).inverse()  # q/g as a unit series
    out = [F(0), F(0)]
    power = base
    out[1] = power[0]
    for n in range(2, M + 1):
        power = power * base
        out.append(power[n - 1] / n)
    return RatSeries(out[: M + 1])


# -- frozen examples ------------------------------------------------------

def test_add_examples():
    assert (series(1, 1) + series(1, -1)).coeffs == (F(2), F(0))
    s = series(0, 1, 1)
    assert (RatSeries.zero(2) + s) == s
    assert (series(0, 1, 1) + series(0, 0, 1)).coeffs == (F(0), F(1), F(2))


def test_mul_examples():
    assert (series(1, 1, 0) * series(1, -1, 0)).coeffs == (F(1), F(0), F(-1))
    assert (series(0, 1, 0) * series(0, 1, 0)).coeffs == (F(0), F(0), F(1))
    square = series(1, 1, 1) * series(1, 1, 1)
    assert square.coeffs == (F(1), F(2), F(3))


def test_mul_truncates_to_min_order():
    a = RatSeries([1] * 11)
    b = RatSeries([1] * 5)
    assert (a * b).order == 4
    assert (a + b).order == 4


def test_inverse_examples():
    geo = series(1, -1, 0, 0).inverse()
    assert geo.coeffs == (F(1), F(1), F(1), F(1))
    assert RatSeries.one(3).inverse() == RatSeries.one(3)
    inv = series(1, 2, 0, 0).inverse()
    assert inv.coeffs == (F(1), F(-2), F(4), F(-8))
    assert (inv * series(1, 2, 0, 0)) == RatSeries.one(3)


def test_inverse_needs_nonzero_constant():
    with pytest.raises(ZeroConstantTerm):
        series(0, 1).inverse()


def test_exp_examples():
    e = RatSeries([0, 1], order=4).exp()
    assert e.coeffs == (F(1), F(1), F(1, 2), F(1, 6), F(1, 24))
    assert RatSeries.zero(3).exp() == RatSeries.one(3)
    grown = series(0, 1, 1, 0).exp()
    assert grown.coeffs == (F(1), F(1), F(3, 2), F(7, 6))
    assert grown == exp_by_partial_sums(series(0, 1, 1, 0))


def test_exp_needs_zero_constant():
    with pytest.raises(NonzeroConstantTerm):
        series(1, 1).exp()


def test_log_examples():
    harmonic = series(1, -1, 0, 0).inverse().log()
    assert harmonic.coeffs == (F(0), F(1), F(1, 2), F(1, 3))
    assert RatSeries.one(4).log() == RatSeries.zero(4)
    assert series(0, 1, 5, 0, 0).exp().log().coeffs == (F(0), F(1), F(5), F(0), F(0))


def test_log_needs_unit_constant():
    with pytest.raises(ConstantTermNotOne):
        series(2, 1).log()


def test_pow_rat_examples():
    root = RatSeries([1, 1], order=3).pow_rat(F(1, 2))
    assert root.coeffs == (F(1), F(1, 2), F(-1, 8), F(1, 16))
    assert (root * root).coeffs == (F(1), F(1), F(0), F(0))
    assert series(1, 7, 3).pow_rat(0) == RatSeries.one(2)


def test_pow_int_matches_repeated_mul():
    s = series(1, 2, 3, 4)
    assert s ** 3 == s * s * s
    assert s ** 0 == RatSeries.one(3)
    assert (s ** -1) == s.inverse()


def test_pow_rat_needs_unit_constant():
    with pytest.raises(ConstantTermNotOne):
        series(2, 1).pow_rat(F(1, 2))


def test_compose_examples():
    f = series(1, 3)
    g = series(0, 1, 6)
    assert f.compose(g).coeffs == (F(1), F(3))
    assert series(1, 3, 0).compose(series(0, 1, 6)).coeffs == (F(1), F(3), F(18))
    anything = series(2, -1, 5, 7)
    assert anything.compose(RatSeries.identity(3)) == anything
    fsq = series(0, 0, 1, 0)  # u^2
    assert fsq.compose(series(0, 1, 1, 0)).coeffs == (F(0), F(0), F(1), F(2))


def test_compose_needs_positive_valuation():
    with pytest.raises(PositiveValuationRequired):
        series(1, 1).compose(series(1, 1))


def test_revert_examples():
    q = RatSeries.identity(4)
    assert q.revert() == q
    r = RatSeries([0, 1, 1], order=4).revert()
    assert r.coeffs == (F(0), F(1), F(-1), F(2), F(-5))
    assert r == revert_by_lagrange(RatSeries([0, 1, 1], order=4))


def test_revert_rejects_bad_input():
    with pytest.raises(NotReversible):
        series(1, 1).revert()
    with pytest.raises(NotReversible):
        series(0, 0, 1).revert()


def test_q_derivative_examples():
    assert RatSeries.identity(1).q_derivative() == RatSeries.identity(1)
    assert series(5).q_derivative().coeffs == (F(0),)
    assert series(0, 1, 1, 1).q_derivative().coeffs == (F(0), F(1), F(2), F(3))


def test_serialization_round_trip():
    s = series(F(3, 2), F(-7), F(0), F(22, 7))
    assert s.to_strings() == ["3/2", "-7", "0", "22/7"]
    assert RatSeries.from_strings(s.to_strings()) == s


def test_coefficients_stay_reduced():
    s = series(F(2, 4), F(6, 4))
    assert s.coeffs == (F(1, 2), F(3, 2))
    assert s.to_strings() == ["1/2", "3/2"]


def test_index_outside_order_raises():
    with pytest.raises(IndexError):
        series(1, 2)[2]


# -- randomized properties ------------------------------------------------

def _random_series(rng, order, constant):
    cs = [constant] + [F(rng.randint(-3, 3)) for _ in range(order)]
    return RatSeries(cs)


def test_exp_log_round_trip_randomized():
    rng = random.Random(20120913)
    for _ in range(30):
        a = _random_series(rng, 30, F(0))
        assert a.exp().log() == a
        u = _random_series(rng, 30, F(1))
        assert u.log().exp() == u


def test_pow_additivity_randomized():
    rng = random.Random(424242)
    for _ in range(25):
        base = _random_series(rng, 20, F(1))
        p = F(rng.randint(-5, 5), rng.choice([1, 2, 3]))
        q = F(rng.randint(-5, 5), rng.choice([1, 2, 3]))
        assert base.pow_rat(p) * base.pow_rat(q) == base.pow_rat(p + q)


def test_reversion_round_trip_randomized():
    rng = random.Random(777)
    q = RatSeries.identity(18)
    for _ in range(15):
        g = RatSeries([0, 1] + [F(rng.randint(-2, 2)) for _ in range(17)])
        h = g.revert()
        assert g.compose(h) == q
        assert h.compose(g) == q


def test_mul_commutes_and_distributes_randomized():
    rng = random.Random(5)
    for _ in range(20):
        a = _random_series(rng, 15, F(rng.randint(-3, 3)))
        b = _random_series(rng, 15, F(rng.randint(-3, 3)))
        c = _random_series(rng, 15, F(rng.randint(-3, 3)))
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
