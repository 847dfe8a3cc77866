"""Open and closed balls in finite metric spaces.

In an ultrametric space two balls are either disjoint or nested, a closed
ball is centred at each of its points, and the complement of an open ball
is open.  The functions here decide these set-level facts by enumeration
so that they can be compared with ordinary metric spaces, where they fail.
"""

from __future__ import annotations

import enum
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Sequence

import numpy as np

from ._exact import Rational, as_fraction
from .space import FiniteMetricSpace, MatrixError, MetricError, format_matrix, parse_matrix, read_matrix

__all__ = [
    "Ball",
    "ConditionReport",
    "FiniteMetricSpace",
    "Kind",
    "MatrixError",
    "MetricError",
    "Relation",
    "all_balls",
    "ball_members",
    "ball_union",
    "center_invariance",
    "classify_balls",
    "complement_separation",
    "format_matrix",
    "parse_matrix",
    "radius_grid",
    "read_matrix",
    "relation_matrix",
    "sufficient_conditions",
    "union_choice",
    "union_mismatches",
]


class Kind(enum.Enum):
    OPEN = "open"
    CLOSED = "closed"


class Relation(enum.Enum):
    DISJOINT = "disjoint"
    SUBSET12 = "subset12"
    SUBSET21 = "subset21"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class Ball:
    center: Hashable
    radius: Fraction
    kind: Kind = Kind.OPEN

    def __post_init__(self):
        radius = as_fraction(self.radius)
        if radius <= 0:
            raise ValueError(f"radius must be positive, got {radius}")
        object.__setattr__(self, "radius", radius)
        object.__setattr__(self, "kind", Kind(self.kind))

    @property
    def closed(self) -> bool:
        return self.kind is Kind.CLOSED


def _mask(space: FiniteMetricSpace, ball: Ball) -> int:
    return space.ball_mask(space.index(ball.center), ball.radius, ball.closed)


def ball_members(space: FiniteMetricSpace, ball: Ball) -> frozenset:
    """Labels of the points in ``ball``."""
    return space.labels_of(_mask(space, ball))


def _relation(m1: int, m2: int) -> Relation:
    common = m1 & m2
    if m1 == m2:
        return Relation.EQUAL
    if not common:
        return Relation.DISJOINT
    if common == m1:
        return Relation.SUBSET12
    if common == m2:
        return Relation.SUBSET21
    return Relation.INCOMPARABLE


def classify_balls(space: FiniteMetricSpace, b1: Ball, b2: Ball) -> Relation:
    """Set-level relation between two balls, decided by enumeration.

    Works in any finite metric space; ``INCOMPARABLE`` (overlapping but not
    nested) can only occur when the space is not an ultrametric.
    """
    return _relation(_mask(space, b1), _mask(space, b2))


def _require_ultrametric(space: FiniteMetricSpace) -> None:
    if not space.is_ultrametric:
        raise ValueError(f"space is not an ultrametric (witness {space.report.witness})")


def _fits_inside(d: Fraction, inner: Ball, outer: Ball) -> bool:
    # inner centre lies in outer, and inner's radius does not reach past outer's
    if d > outer.radius or (d == outer.radius and not outer.closed):
        return False
    if inner.radius < outer.radius:
        return True
    return inner.radius == outer.radius and (outer.closed or not inner.closed)


@dataclass(frozen=True)
class ConditionReport:
    """Which distance tests fired and what enumeration found.

    ``disjoint_test``: ``d(x, y) > max(r, t)``.  ``first_in_second``: the
    centre of ``b1`` lies in ``b2`` and ``r <= t`` (strictly when only
    ``b2`` is open).  ``second_in_first`` is the mirror image.
    """

    disjoint_test: bool
    first_in_second: bool
    second_in_first: bool
    relation: Relation

    @property
    def consistent(self) -> bool:
        """Every test that fired is confirmed by the enumerated relation."""
        if self.disjoint_test and self.relation is not Relation.DISJOINT:
            return False
        if self.first_in_second and self.relation not in (Relation.SUBSET12, Relation.EQUAL):
            return False
        if self.second_in_first and self.relation not in (Relation.SUBSET21, Relation.EQUAL):
            return False
        return True


def sufficient_conditions(space: FiniteMetricSpace, b1: Ball, b2: Ball) -> ConditionReport:
    """Evaluate the distance tests that predict disjointness or nesting."""
    _require_ultrametric(space)
    d = space.d(b1.center, b2.center)
    return ConditionReport(
        disjoint_test=d > max(b1.radius, b2.radius),
        first_in_second=_fits_inside(d, b1, b2),
        second_in_first=_fits_inside(d, b2, b1),
        relation=classify_balls(space, b1, b2),
    )


def ball_union(space: FiniteMetricSpace, b1: Ball, b2: Ball) -> Ball | None:
    """A single ball equal to ``b1 | b2`` when they meet; None when disjoint.

    The result has radius ``max(r, t)`` and is centred at the centre of the
    ball with that radius.  With equal radii and mixed kinds it is closed.
    """
    _require_ultrametric(space)
    if not _mask(space, b1) & _mask(space, b2):
        return None
    if b1.radius != b2.radius:
        return b1 if b1.radius > b2.radius else b2
    if b1.kind is b2.kind:
        return b1
    return b1 if b1.closed else b2


def center_invariance(space: FiniteMetricSpace, w: Hashable, t: Rational) -> bool:
    """Does every point of the closed ball ``B[w, t]`` centre the same closed ball?

    Always true in an ultrametric space; evaluated on any metric space.
    """
    masks = space.ball_masks(as_fraction(t), True)
    home = masks[space.index(w)]
    return all(masks[x] == home for x in range(len(space)) if home >> x & 1)


def complement_separation(space: FiniteMetricSpace, w: Hashable, t: Rational) -> bool:
    """For every ``x`` with ``d(w, x) >= t``, is ``B(x, t)`` disjoint from ``B(w, t)``?

    This is the distance-level form of "open balls are closed".
    """
    masks = space.ball_masks(as_fraction(t), False)
    home = masks[space.index(w)]
    return all(not masks[x] & home for x in range(len(space)) if not home >> x & 1)


def radius_grid(space: FiniteMetricSpace) -> list[Fraction]:
    """Radii at which some ball can change: the positive realized distances,
    the midpoints between consecutive ones, one radius below the smallest and
    one above the diameter."""
    ds = [v for v in space.distances() if v > 0]
    if not ds:
        return [Fraction(1)]
    grid = [ds[0] / 2]
    for lo, hi in zip(ds, ds[1:]):
        grid += [lo, (lo + hi) / 2]
    grid += [ds[-1], ds[-1] + 1]
    return grid


def all_balls(space: FiniteMetricSpace, radii: Sequence[Rational] | None = None) -> list[Ball]:
    """Every (centre, radius, kind) combination over ``radii`` (default: the grid)."""
    radii = radius_grid(space) if radii is None else [as_fraction(r) for r in radii]
    return [Ball(label, r, kind) for label in space.labels for r in radii for kind in Kind]


def _intersections(space: FiniteMetricSpace, balls: Sequence[Ball]) -> np.ndarray:
    """Counts ``|b_i & b_j|`` for all pairs, from the 0/1 membership matrix."""
    # d < r is rank(d) < bisect_left(values, r); d <= r uses bisect_right
    ranks, values = space.ranked()
    centers = np.array([space.index(b.center) for b in balls], dtype=np.intp)
    cuts = np.array(
        [(bisect_right if b.closed else bisect_left)(values, b.radius) for b in balls], dtype=np.int64
    )
    m = (ranks[centers] < cuts[:, None]).astype(np.float64)
    # float products of 0/1 entries are exact integers far below 2**53
    return (m @ m.T).astype(np.int32)


_CODES = list(Relation)


def relation_matrix(space: FiniteMetricSpace, balls: Sequence[Ball]) -> np.ndarray:
    """Pairwise :func:`classify_balls` verdicts as indices into ``list(Relation)``.

    Computed from the intersection counts ``M @ M.T`` of the 0/1 membership
    matrix, so large sweeps stay fast.
    """
    inter = _intersections(space, balls)
    size = np.diag(inter)
    in12 = inter == size[:, None]
    in21 = inter == size[None, :]
    code = np.full(inter.shape, _CODES.index(Relation.INCOMPARABLE), dtype=np.int8)
    code[in12] = _CODES.index(Relation.SUBSET12)
    code[in21] = _CODES.index(Relation.SUBSET21)
    code[in12 & in21] = _CODES.index(Relation.EQUAL)
    code[inter == 0] = _CODES.index(Relation.DISJOINT)
    return code


def _pick(balls: Sequence[Ball], inter: np.ndarray) -> np.ndarray:
    ranks = {r: k for k, r in enumerate(sorted({b.radius for b in balls}))}
    r = np.array([ranks[b.radius] for b in balls], dtype=np.int32)
    closed = np.array([b.closed for b in balls])
    i = np.arange(len(balls), dtype=np.int32)[:, None]
    j = i.T
    tie = np.where((closed[:, None] == closed[None, :]) | closed[:, None], i, j)
    pick = np.where(r[:, None] > r[None, :], i, np.where(r[:, None] < r[None, :], j, tie))
    return np.where(inter > 0, pick, np.int32(-1))


def union_choice(space: FiniteMetricSpace, balls: Sequence[Ball]) -> np.ndarray:
    """For every pair, the index of the ball :func:`ball_union` returns (-1 for None).

    Vectorized restatement of :func:`ball_union`'s selection rule.
    """
    _require_ultrametric(space)
    return _pick(balls, _intersections(space, balls))


def union_mismatches(space: FiniteMetricSpace, balls: Sequence[Ball]) -> np.ndarray:
    """Index pairs ``(i, j)`` where the ball chosen as the union is not the union.

    The chosen ball ``u`` must contain both inputs and have
    ``|u| = |b1| + |b2| - |b1 & b2|``; pairs that do not meet must get -1.
    """
    _require_ultrametric(space)
    inter = _intersections(space, balls)
    size = np.diag(inter)
    choice = _pick(balls, inter)
    i = np.arange(len(balls))[:, None]
    j = i.T
    k = np.maximum(choice, 0)
    ok = (
        (inter[k, i] == size[i])
        & (inter[k, j] == size[j])
        & (size[k] == size[i] + size[j] - inter)
    )
    ok = np.where(choice < 0, inter == 0, ok)
    return np.argwhere(~ok)
