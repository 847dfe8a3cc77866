"""Dyadic intervals ``[i * 2**l, (i + 1) * 2**l)``.

Two dyadic intervals are always disjoint or nested.  Half-open intervals
are canonical, so each level partitions the line; the closed variant only
appears as the image of a sequence ball under ``phi``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ._exact import Rational, as_fraction
from .balls import Relation
from .cantor import ClosedInterval, phi_ball_image
from .seqspace import BiSequence, SymbolSequence

__all__ = [
    "DyadicInterval",
    "classify_dyadic",
    "dyadic_phi_correspondence",
    "enclosing_dyadic",
    "parse_dyadic",
]


@dataclass(frozen=True, order=True)
class DyadicInterval:
    i: int
    l: int  # noqa: E741

    @property
    def lo(self) -> Fraction:
        return self.i * Fraction(2) ** self.l

    @property
    def hi(self) -> Fraction:
        return (self.i + 1) * Fraction(2) ** self.l

    @property
    def length(self) -> Fraction:
        return Fraction(2) ** self.l

    def __contains__(self, x) -> bool:
        return self.lo <= x < self.hi

    def closure(self) -> ClosedInterval:
        return ClosedInterval(self.lo, self.hi)

    def __str__(self) -> str:
        return f"D({self.i},{self.l})"


def parse_dyadic(text: str) -> DyadicInterval:
    """Parse ``D(i,l)``."""
    body = text.strip()
    if not (body.startswith("D(") and body.endswith(")")):
        raise ValueError(f"bad dyadic interval literal: {text!r}")
    try:
        i, l = (int(part) for part in body[2:-1].split(","))  # noqa: E741
    except ValueError:
        raise ValueError(f"bad dyadic interval literal: {text!r}") from None
    return DyadicInterval(i, l)


def _endpoints(a: DyadicInterval, level: int) -> tuple[int, int]:
    # endpoints in units of 2**level, level <= a.l
    k = a.l - level
    return a.i << k, (a.i + 1) << k


def classify_dyadic(a: DyadicInterval, b: DyadicInterval) -> Relation:
    """Relation between two half-open dyadic intervals, by integer comparison.

    >>> classify_dyadic(DyadicInterval(0, 0), DyadicInterval(1, 0))
    <Relation.DISJOINT: 'disjoint'>
    """
    level = min(a.l, b.l)
    alo, ahi = _endpoints(a, level)
    blo, bhi = _endpoints(b, level)
    if alo == blo and ahi == bhi:
        return Relation.EQUAL
    if ahi <= blo or bhi <= alo:
        return Relation.DISJOINT
    if blo <= alo and ahi <= bhi:
        return Relation.SUBSET12
    if alo <= blo and bhi <= ahi:
        return Relation.SUBSET21
    return Relation.INCOMPARABLE


def enclosing_dyadic(x: Rational | str, l: int) -> DyadicInterval:  # noqa: E741
    """The level-``l`` dyadic interval containing ``x``."""
    x = as_fraction(x)
    return DyadicInterval(math.floor(x / Fraction(2) ** l), l)


def dyadic_phi_correspondence(
    center: Union[SymbolSequence, BiSequence], depth: int
) -> tuple[DyadicInterval, ClosedInterval]:
    """The half-open dyadic interval matching ``phi`` of a depth-``depth`` sequence ball.

    Raises ValueError if the closure of the dyadic interval differs from
    the ball image (it never should).
    """
    image = phi_ball_image(center, depth)
    cell = enclosing_dyadic(image.lo, -depth)
    if cell.closure() != image:
        raise ValueError(f"{cell} does not close up to {image}")
    return cell, image
