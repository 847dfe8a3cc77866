import math
from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given, strategies as st

from ultrametric.padic import (
    PAdicNumber,
    ZeroAtPrecisionError,
    abs_p,
    dist_p,
    padic_add,
    padic_inv,
    padic_mul,
    padic_neg,
    padic_sub,
    series_sum,
    to_padic,
    valuation,
)

PRIMES = [2, 3, 5, 7, 11]


def valuation_oracle(x: F, p: int):
    # independent route: full factorization of numerator and denominator
    if x == 0:
        return math.inf
    return sympy.factorint(x.numerator).get(p, 0) - sympy.factorint(x.denominator).get(p, 0)


def unit_digits_oracle(x: F, p: int, n: int) -> list[int]:
    # brute force: the unique u in [0, p**n) with u * den == num (mod p**n)
    v = valuation_oracle(x, p)
    unit = x / F(p) ** v
    mod = p**n
    (u,) = [u for u in range(mod) if (u * unit.denominator - unit.numerator) % mod == 0]
    return [u // p**i % p for i in range(n)]


rationals = st.fractions(max_denominator=10**6).filter(lambda x: abs(x.numerator) <= 10**6)
primes = st.sampled_from(PRIMES)


@pytest.mark.parametrize(
    "x, p, expected",
    [(0, 7, math.inf), (12, 2, 2), (F(9, 10), 3, 2), (F(1, 12), 2, -2)],
)
def test_valuation_examples(x, p, expected):
    assert valuation(x, p) == expected == valuation_oracle(F(x), p)


@pytest.mark.parametrize("x, p, expected", [(0, 5, 0), (12, 2, F(1, 4)), (5, 2, 1)])
def test_abs_p_examples(x, p, expected):
    assert abs_p(x, p) == expected


def test_dist_p_examples():
    assert dist_p(F(3, 7), F(3, 7), 5) == 0
    assert dist_p(1, 13, 2) == F(1, 4)
    assert dist_p(F(1, 3), F(1, 2), 5) == 1


@pytest.mark.parametrize("bad", [0, 1, -3, 4, 9, 91])
def test_rejects_bad_primes(bad):
    with pytest.raises(ValueError):
        valuation(3, bad)


@given(rationals, primes)
def test_valuation_matches_factorization(x, p):
    assert valuation(x, p) == valuation_oracle(x, p)


@given(rationals, rationals, primes)
def test_ultrametric_inequality(x, y, p):
    assert abs_p(x + y, p) <= max(abs_p(x, p), abs_p(y, p))


@given(rationals, rationals, primes)
def test_multiplicative(x, y, p):
    assert abs_p(x * y, p) == abs_p(x, p) * abs_p(y, p)


@given(st.integers(-(10**12), 10**12), primes)
def test_integers_have_abs_at_most_one(n, p):
    assert abs_p(n, p) <= 1


@pytest.mark.parametrize(
    "x, p, n, v, digits",
    [(-1, 5, 4, 0, [4, 4, 4, 4]), (F(1, 3), 2, 4, 0, [1, 1, 0, 1]), (F(1, 2), 2, 3, -1, [1, 0, 0])],
)
def test_to_padic_examples(x, p, n, v, digits):
    a = to_padic(x, p, n)
    assert (a.v, list(a.digits), a.zero) == (v, digits, False)
    assert list(a.digits) == unit_digits_oracle(F(x), p, n)


@given(rationals.filter(bool), st.sampled_from([2, 3, 5]), st.integers(1, 5))
def test_to_padic_against_brute_force(x, p, n):
    a = to_padic(x, p, n)
    assert a.v == valuation_oracle(x, p)
    assert list(a.digits) == unit_digits_oracle(x, p, n)


@given(rationals, primes, st.integers(1, 40))
def test_round_trip(x, p, n):
    a = to_padic(x, p, n)
    assert a.congruent(x)
    # an ordinary integer represents the unit part modulo p**n
    if not a.zero:
        unit = x / F(p) ** a.v
        assert valuation(unit - a.unit, p) >= n


def test_zero():
    z = to_padic(0, 3, 5)
    assert z.zero and z.digits == (0,) * 5
    assert str(z) == "p=3 v=0 digits=[0,0,0,0,0]"


def test_rendering():
    assert str(to_padic(F(1, 2), 2, 3)) == "p=2 v=-1 digits=[1,0,0]"


def test_additive_inverse_is_zero_at_precision():
    s = padic_add(to_padic(-1, 5, 4), to_padic(1, 5, 4))
    assert s.zero
    assert s.absolute_precision == 4
    assert s.precision == 4


def test_multiplicative_inverse():
    prod = padic_mul(to_padic(3, 2, 4), to_padic(F(1, 3), 2, 4))
    assert (prod.v, prod.digits) == (0, (1, 0, 0, 0))


def test_valuation_algebra():
    prod = padic_mul(to_padic(12, 2, 6), to_padic(F(1, 12), 2, 6))
    assert prod.v == valuation_oracle(F(12), 2) + valuation_oracle(F(1, 12), 2) == 0


def test_inverse_examples():
    inv = padic_inv(to_padic(3, 2, 4))
    assert (inv.v, inv.digits) == (0, (1, 1, 0, 1))
    assert 3 * 11 % 16 == 1
    assert padic_inv(to_padic(1, 7, 3)) == to_padic(1, 7, 3)
    inv2 = padic_inv(to_padic(2, 2, 4))
    assert (inv2.v, inv2.digits) == (-1, (1, 0, 0, 0))


def test_inverting_zero_fails():
    with pytest.raises(ZeroAtPrecisionError, match="zero at precision"):
        padic_inv(to_padic(0, 5, 3))
    with pytest.raises(ZeroDivisionError):
        to_padic(2, 5, 3) / padic_sub(to_padic(7, 5, 3), to_padic(7, 5, 3))


def test_mismatched_primes():
    with pytest.raises(ValueError, match="mismatched"):
        padic_add(to_padic(1, 2, 3), to_padic(1, 3, 3))


def test_cancellation_drops_unreliable_digits():
    # 1 + 4 = 5 in Q_5 known mod 5**4: valuation 1, three reliable digits
    s = padic_add(to_padic(1, 5, 4), to_padic(4, 5, 4))
    assert (s.v, s.digits) == (1, (1, 0, 0))
    assert s.absolute_precision == 4


def test_validation():
    with pytest.raises(ValueError):
        PAdicNumber(5, 0, (0, 1))
    with pytest.raises(ValueError):
        PAdicNumber(5, 0, (5,))
    with pytest.raises(ValueError):
        PAdicNumber(5, 0, ())
    with pytest.raises(ValueError):
        to_padic(1, 5, 0)


@given(rationals, rationals, st.sampled_from([2, 3, 5]), st.integers(1, 12))
def test_arithmetic_agrees_with_rationals(x, y, p, n):
    a, b = to_padic(x, p, n), to_padic(y, p, n)
    assert padic_add(a, b).congruent(x + y)
    assert padic_sub(a, b).congruent(x - y)
    assert padic_mul(a, b).congruent(x * y)
    assert padic_neg(a).congruent(-x)
    if x:
        assert padic_inv(a).congruent(1 / x)


@given(rationals.filter(bool), rationals.filter(bool), st.sampled_from([2, 3, 5]), st.integers(1, 12))
def test_product_valuations_add(x, y, p, n):
    assert padic_mul(to_padic(x, p, n), to_padic(y, p, n)).v == valuation(x, p) + valuation(y, p)


def test_series_examples():
    value, converged = series_sum([2**j for j in range(64)], 2, 32)
    assert converged
    assert value.congruent(-1)
    assert value.congruent(2**64 - 1)
    one, ok = series_sum([1], 5, 6)
    assert ok and one == to_padic(1, 5, 6)
    _, ok = series_sum([1] * 64, 2, 8)
    assert not ok


@pytest.mark.parametrize("p", [2, 3, 5, 7])
@pytest.mark.parametrize("k", [0, 1, 5, 11, 12, 20])
def test_geometric_identity(p, k):
    n = 12
    value, _ = series_sum([p**j for j in range(k + 1)], p, n)
    lhs = padic_mul(to_padic(1 - p, p, n), value)
    assert lhs.congruent(1 - p ** (k + 1))
    if k + 1 >= n:
        assert lhs.congruent(1)
