"""p-adic valuations, absolute values and truncated p-adic arithmetic.

Elements of Q_p are modelled with fixed relative precision: a valuation
``v`` plus the first ``N`` base-p digits of the unit part, so that a
:class:`PAdicNumber` stands for every p-adic number congruent to

    p**v * (d0 + d1*p + ... + d{N-1}*p**(N-1))   mod p**(v + N).

Digits are little-endian.  Arithmetic never claims more digits than its
operands justify: when an addition cancels leading digits, the result keeps
only the reliable ones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from ._exact import Rational, as_fraction, check_prime

__all__ = [
    "PAdicNumber",
    "ZeroAtPrecisionError",
    "abs_p",
    "dist_p",
    "padic_add",
    "padic_inv",
    "padic_mul",
    "padic_neg",
    "padic_sub",
    "series_sum",
    "to_padic",
    "valuation",
]


class ZeroAtPrecisionError(ZeroDivisionError):
    """Raised when inverting a value that is zero at working precision."""


def _int_valuation(n: int, p: int) -> int:
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def valuation(x: Rational | str, p: int) -> int | float:
    """Exponent of ``p`` in ``x``; ``math.inf`` for ``x == 0``.

    >>> valuation(12, 2)
    2
    >>> valuation(Fraction(1, 12), 2)
    -2
    """
    check_prime(p)
    x = as_fraction(x)
    if x == 0:
        return math.inf
    # a reduced fraction: p divides at most one of numerator and denominator
    return _int_valuation(x.numerator, p) - _int_valuation(x.denominator, p)


def abs_p(x: Rational | str, p: int) -> Fraction:
    """The p-adic absolute value ``p**-valuation(x, p)``, exactly."""
    v = valuation(x, p)
    if v == math.inf:
        return Fraction(0)
    return Fraction(p) ** -v


def dist_p(x: Rational | str, y: Rational | str, p: int) -> Fraction:
    """The p-adic distance ``|x - y|_p``."""
    return abs_p(as_fraction(x) - as_fraction(y), p)


def _digits(n: int, p: int, count: int) -> tuple[int, ...]:
    out = []
    for _ in range(count):
        n, d = divmod(n, p)
        out.append(d)
    return tuple(out)


@dataclass(frozen=True)
class PAdicNumber:
    """A p-adic number known to ``len(digits)`` significant digits.

    For nonzero values ``digits[0] != 0``.  A zero value (``zero=True``) has
    all-zero digits and is known to vanish modulo ``p**(v + len(digits))``.
    """

    p: int
    v: int
    digits: tuple[int, ...]
    zero: bool = False

    def __post_init__(self):
        check_prime(self.p)
        object.__setattr__(self, "digits", tuple(self.digits))
        if not self.digits:
            raise ValueError("a p-adic number needs at least one digit")
        if any(not 0 <= d < self.p for d in self.digits):
            raise ValueError(f"digits must lie in [0, {self.p})")
        if self.zero and any(self.digits):
            raise ValueError("zero values carry only zero digits")
        if not self.zero and self.digits[0] == 0:
            raise ValueError("nonzero values must have a nonzero leading digit")

    @property
    def precision(self) -> int:
        """Number of significant digits."""
        return len(self.digits)

    @property
    def absolute_precision(self) -> int:
        """The value is known modulo ``p**absolute_precision``."""
        return self.v + len(self.digits)

    @property
    def unit(self) -> int:
        """The digits read as an integer in ``[0, p**N)``."""
        return sum(d * self.p**i for i, d in enumerate(self.digits))

    def to_fraction(self) -> Fraction:
        """A rational representative: ``p**v * unit`` (0 for zero values)."""
        if self.zero:
            return Fraction(0)
        return Fraction(self.p) ** self.v * self.unit

    def congruent(self, x: Rational | str) -> bool:
        """True if the rational ``x`` is compatible with this value."""
        diff = as_fraction(x) - self.to_fraction()
        return valuation(diff, self.p) >= self.absolute_precision

    def __str__(self) -> str:
        return f"p={self.p} v={self.v} digits=[{','.join(map(str, self.digits))}]"

    def __add__(self, other: PAdicNumber) -> PAdicNumber:
        return padic_add(self, other)

    def __sub__(self, other: PAdicNumber) -> PAdicNumber:
        return padic_sub(self, other)

    def __mul__(self, other: PAdicNumber) -> PAdicNumber:
        return padic_mul(self, other)

    def __truediv__(self, other: PAdicNumber) -> PAdicNumber:
        return padic_mul(self, padic_inv(other))

    def __neg__(self) -> PAdicNumber:
        return padic_neg(self)


def _from_scaled(p: int, m: int, value: int, abs_prec: int, width: int) -> PAdicNumber:
    # value * p**m, known modulo p**abs_prec; width bounds the digit count of a zero
    value %= p ** (abs_prec - m)
    if value == 0:
        return PAdicNumber(p, abs_prec - width, (0,) * width, zero=True)
    k = _int_valuation(value, p)
    v = m + k
    rel = abs_prec - v
    return PAdicNumber(p, v, _digits(value // p**k, p, rel))


def to_padic(x: Rational | str, p: int, digits: int) -> PAdicNumber:
    """Expand the rational ``x`` to ``digits`` significant base-``p`` digits.

    The unit part's denominator is inverted modulo ``p**digits``.

    >>> str(to_padic(-1, 5, 4))
    'p=5 v=0 digits=[4,4,4,4]'
    """
    check_prime(p)
    if digits < 1:
        raise ValueError(f"need at least one digit, got {digits}")
    x = as_fraction(x)
    if x == 0:
        return PAdicNumber(p, 0, (0,) * digits, zero=True)
    v = valuation(x, p)
    unit = x / Fraction(p) ** v
    mod = p**digits
    n = unit.numerator * pow(unit.denominator, -1, mod) % mod
    return PAdicNumber(p, v, _digits(n, p, digits))


def _check_same_prime(a: PAdicNumber, b: PAdicNumber) -> None:
    if a.p != b.p:
        raise ValueError(f"mismatched primes {a.p} and {b.p}")


def padic_add(a: PAdicNumber, b: PAdicNumber) -> PAdicNumber:
    """Sum, truncated to the absolute precision both operands support."""
    _check_same_prime(a, b)
    p = a.p
    m = min(a.v, b.v)
    value = a.unit * p ** (a.v - m) + b.unit * p ** (b.v - m)
    abs_prec = min(a.absolute_precision, b.absolute_precision)
    return _from_scaled(p, m, value, abs_prec, max(a.precision, b.precision))


def padic_neg(a: PAdicNumber) -> PAdicNumber:
    if a.zero:
        return a
    n = a.precision
    return PAdicNumber(a.p, a.v, _digits(-a.unit % a.p**n, a.p, n))


def padic_sub(a: PAdicNumber, b: PAdicNumber) -> PAdicNumber:
    return padic_add(a, padic_neg(b))


def padic_mul(a: PAdicNumber, b: PAdicNumber) -> PAdicNumber:
    """Product; valuations add and relative precision is the smaller one."""
    _check_same_prime(a, b)
    p = a.p
    if a.zero or b.zero:
        # a zero known mod p**k times y with valuation w is zero mod p**(k + w)
        if a.zero and b.zero:
            abs_prec = a.absolute_precision + b.absolute_precision
        elif a.zero:
            abs_prec = a.absolute_precision + b.v
        else:
            abs_prec = b.absolute_precision + a.v
        width = max(a.precision, b.precision)
        return PAdicNumber(p, abs_prec - width, (0,) * width, zero=True)
    n = min(a.precision, b.precision)
    return PAdicNumber(p, a.v + b.v, _digits(a.unit * b.unit % p**n, p, n))


def padic_inv(a: PAdicNumber) -> PAdicNumber:
    """Multiplicative inverse: invert the unit part, negate the valuation."""
    if a.zero:
        raise ZeroAtPrecisionError(
            f"value is zero at precision {a.precision} (mod {a.p}^{a.absolute_precision}); "
            "cannot invert"
        )
    n = a.precision
    mod = a.p**n
    return PAdicNumber(a.p, -a.v, _digits(pow(a.unit, -1, mod), a.p, n))


def series_sum(
    terms: Iterable[Rational | str], p: int, digits: int
) -> tuple[PAdicNumber, bool]:
    """Sum a finite run of a p-adic series.

    The partial sum is formed exactly over the rationals and then expanded.
    The run counts as converged when its last term is already invisible at
    working precision (``|x|_p < p**-digits``); a single term is trivially
    converged.  Terms that stay p-adically large, e.g. a run of ones, never
    converge however long the run.
    """
    check_prime(p)
    terms = [as_fraction(t) for t in terms]
    total = sum(terms, Fraction(0))
    if len(terms) <= 1:
        converged = True
    else:
        converged = abs_p(terms[-1], p) < Fraction(1, p**digits)
    return to_padic(total, p, digits), converged

