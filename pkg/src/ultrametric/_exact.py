"""Exact-arithmetic helpers shared across the package."""

from __future__ import annotations

from fractions import Fraction
from typing import Union

import gmpy2

Rational = Union[int, Fraction]


def as_fraction(x: Rational | str) -> Fraction:
    """Coerce ints, Fractions and ``p/q`` strings to a Fraction.

    Floats are refused: every quantity in the package is exact.
    """
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or 'p/q' string")
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational number: {x!r}") from exc
    return Fraction(x)


def format_fraction(x: Rational) -> str:
    """Render in lowest terms as ``num/den`` (integers without a denominator)."""
    return str(Fraction(x))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def check_prime(p: int) -> int:
    if not isinstance(p, int) or isinstance(p, bool):
        raise TypeError(f"prime must be an int, got {type(p).__name__}")
    if p < 2:
        raise ValueError(f"p must be at least 2, got {p}")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return p


def exact_root(x: Fraction, k: int) -> Fraction | None:
    """The exact nonnegative k-th root of ``x`` if it is rational, else None."""
    if x < 0:
        raise ValueError("root of a negative number")
    num, ok_n = gmpy2.iroot(x.numerator, k)
    if not ok_n:
        return None
    den, ok_d = gmpy2.iroot(x.denominator, k)
    if not ok_d:
        return None
    return Fraction(int(num), int(den))


def root_bounds(x: Fraction, k: int, bits: int) -> tuple[Fraction, Fraction]:
    """Rational bounds ``lo <= x**(1/k) <= hi`` with ``hi - lo <= 2**-bits``."""
    scale = 1 << bits
    # floor(x * scale**k) is an integer whose k-th root brackets x**(1/k) * scale
    m = (x.numerator * scale**k) // x.denominator
    r = int(gmpy2.iroot(m, k)[0])
    return Fraction(r, scale), Fraction(r + 1, scale)


def rank_values(values) -> dict[Fraction, int]:
    """Map each distinct exact value to its position in sorted order."""
    return {v: i for i, v in enumerate(sorted(set(values)))}
