"""Binary and Cantor-set encodings of binary sequences.

``phi`` reads a binary sequence as a binary expansion in [0, 1] and
``psi`` reads it as a ternary expansion with digits 0 and 2, landing in the
middle-thirds Cantor set.  Both are evaluated exactly: the prefix is a
finite sum and the periodic tail a geometric series in closed form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ._exact import Rational, as_fraction, format_fraction
from .seqspace import BINARY, BiSequence, SymbolSequence, embed

__all__ = [
    "ClosedInterval",
    "cantor_stage_member",
    "phi",
    "phi_ball_image",
    "phi_collision",
    "phi_decode",
    "phi_star",
    "psi",
    "psi_decode",
]


@dataclass(frozen=True)
class ClosedInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", as_fraction(self.lo))
        object.__setattr__(self, "hi", as_fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    def __str__(self) -> str:
        return f"[{format_fraction(self.lo)},{format_fraction(self.hi)}]"


def _check_binary(b: SymbolSequence | BiSequence) -> None:
    if b.alphabet.size != 2:
        raise ValueError("expected a binary sequence")


def _expansion(b: SymbolSequence, base: int, weight: int) -> Fraction:
    # sum_i weight * b_i * base**-i over prefix and periodic tail
    total = Fraction(0)
    scale = Fraction(1)
    for s in b.prefix:
        scale /= base
        total += weight * s * scale
    block = Fraction(0)
    step = Fraction(1)
    for s in b.tail:
        step /= base
        block += weight * s * step
    # the block repeats with ratio base**-len(tail)
    return total + scale * block / (1 - step)


def phi(b: SymbolSequence) -> Fraction:
    """``sum b_i 2**-i``, the number with binary expansion ``0.b1 b2 ...``.

    >>> phi(SymbolSequence.periodic([1]))
    Fraction(1, 1)
    """
    _check_binary(b)
    return _expansion(b, 2, 1)


def phi_star(b: BiSequence) -> Fraction:
    """``phi`` on two-sided sequences: ``sum_i b_i 2**-i`` over all ``i``."""
    _check_binary(b)
    return Fraction(2) ** -b.start * _expansion(b.body, 2, 1)


def psi(b: SymbolSequence) -> Fraction:
    """``sum 2 b_i 3**-i``, a point of the middle-thirds Cantor set."""
    _check_binary(b)
    return _expansion(b, 3, 2)


def _base_expansion(x: Fraction, base: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    # digits of x in [0, 1) by long division; the block starts at the first repeated remainder
    num, den = x.numerator, x.denominator
    seen: dict[int, int] = {}
    digits: list[int] = []
    while num not in seen:
        seen[num] = len(digits)
        d, num = divmod(num * base, den)
        digits.append(d)
    k = seen[num]
    return tuple(digits[:k]), tuple(digits[k:])


def _check_unit(x: Fraction) -> None:
    if not 0 <= x <= 1:
        raise ValueError(f"{x} is outside [0, 1]")


def phi_decode(x: Rational | str) -> SymbolSequence:
    """The binary expansion of ``x`` in [0, 1] that is not eventually all ones
    (except for ``x = 1`` itself)."""
    x = as_fraction(x)
    _check_unit(x)
    if x == 1:
        return SymbolSequence.constant(1)
    prefix, block = _base_expansion(x, 2)
    return SymbolSequence(BINARY, prefix, block)


def phi_collision(x: Rational | str) -> tuple[SymbolSequence, SymbolSequence] | None:
    """Both binary expansions of a dyadic rational in (0, 1), else None.

    The terminating expansion comes first, then the one ending in ones.
    """
    x = as_fraction(x)
    _check_unit(x)
    den = x.denominator
    if x in (0, 1) or den & (den - 1):
        return None
    m = den.bit_length() - 1
    bits = tuple(int(c) for c in format(x.numerator, f"0{m}b"))
    finite = SymbolSequence(BINARY, bits, (0,))
    other = SymbolSequence(BINARY, bits[:-1] + (0,), (1,))
    return finite, other


def psi_decode(x: Rational | str) -> SymbolSequence | None:
    """The binary sequence ``b`` with ``psi(b) == x``, or None if ``x`` is not in the Cantor set.

    The standard ternary expansion is tried first; a terminating expansion
    ending in digit 1 is also tried in its ``...0222...`` form.
    """
    x = as_fraction(x)
    if not 0 <= x <= 1:
        return None
    if x == 1:
        return SymbolSequence.constant(1)
    prefix, block = _base_expansion(x, 3)
    if block == (0,) and prefix and prefix[-1] == 1:
        prefix, block = prefix[:-1] + (0,), (2,)
    if any(d == 1 for d in prefix + block):
        return None
    return SymbolSequence(BINARY, tuple(d // 2 for d in prefix), tuple(d // 2 for d in block))


def cantor_stage_member(x: Rational | str, n: int) -> bool:
    """Is ``x`` in ``E_n``, the union of the ``2**n`` closed intervals of the n-th stage?"""
    if n < 0:
        raise ValueError("stages are numbered from 0")
    x = as_fraction(x)
    if not 0 <= x <= 1:
        return False
    third = Fraction(1, 3)
    for _ in range(n):
        # zoom into whichever third x lies in
        if x <= third:
            x = 3 * x
        elif x >= 2 * third:
            x = 3 * x - 2
        else:
            return False
    return True


Center = Union[SymbolSequence, BiSequence]


def phi_ball_image(center: Center, depth: int) -> ClosedInterval:
    """Image under ``phi`` of the closed ball of sequences agreeing with ``center`` through ``depth``.

    The result is ``[s, s + 2**-depth]`` with ``s`` the truncated sum.
    """
    if isinstance(center, SymbolSequence):
        if depth < 0:
            raise ValueError("one-sided balls have depth >= 0")
        center = embed(center)
    _check_binary(center)
    s = sum((center[i] * Fraction(2) ** -i for i in range(center.start + 1, depth + 1)), Fraction(0))
    return ClosedInterval(s, s + Fraction(2) ** -depth)
