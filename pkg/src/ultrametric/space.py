"""Finite metric spaces with exact rational distances.

Besides the :class:`FiniteMetricSpace` container this module holds the
axiom audit used to validate every space, and the text format for distance
matrices::

    3
    a b c
    0 1 1
    1 0 1/2
    1 1/2 0

Ultrametric tests run on integer ranks of the distinct distance values.
Ranking is order preserving, so ``d(x,z) <= max(d(x,y), d(y,z))`` holds for
the ranks exactly when it holds for the rationals, and the ranked form can
be checked over all triples with numpy.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np

from ._exact import as_fraction, exact_root, format_fraction, rank_values, root_bounds

__all__ = [
    "AxiomReport",
    "FiniteMetricSpace",
    "MatrixError",
    "MetricError",
    "audit",
    "format_matrix",
    "parse_matrix",
    "read_matrix",
]


class MatrixError(ValueError):
    """The distance matrix is malformed (shape, diagonal, symmetry, sign)."""


class MetricError(ValueError):
    """The distance matrix violates a metric axiom."""


@dataclass(frozen=True)
class AxiomReport:
    """Verdict of an exhaustive triple scan.

    ``witness`` names the first triple ``(x, y, z)`` (lexicographic order)
    violating the strongest inequality that failed: the triangle
    inequality if the space is not a metric, otherwise the max-inequality.
    """

    is_metric: bool
    is_ultrametric: bool
    witness: tuple | None = None

    def __str__(self) -> str:
        yes = {True: "yes", False: "no"}
        out = f"metric={yes[self.is_metric]} ultrametric={yes[self.is_ultrametric]}"
        if self.witness is not None:
            out += " witness=(" + ",".join(map(str, self.witness)) + ")"
        return out


def _as_matrix(dist: Sequence[Sequence]) -> list[list[Fraction]]:
    rows = [[as_fraction(v) for v in row] for row in dist]
    n = len(rows)
    for i, row in enumerate(rows):
        if len(row) != n:
            raise MatrixError(f"matrix is not square: row {i} has {len(row)} entries, expected {n}")
    for i in range(n):
        if rows[i][i] != 0:
            raise MatrixError(f"nonzero diagonal entry d({i},{i}) = {rows[i][i]}")
    for i in range(n):
        for j in range(n):
            if rows[i][j] < 0:
                raise MatrixError(f"negative entry d({i},{j}) = {rows[i][j]}")
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise MatrixError(f"asymmetric entries d({i},{j}) = {rows[i][j]} but d({j},{i}) = {rows[j][i]}")
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] == 0:
                raise MatrixError(f"distinct points {i} and {j} at distance 0")
    return rows


def rank_matrix(rows: list[list[Fraction]]) -> tuple[np.ndarray, list[Fraction]]:
    """Integer ranks of the entries, plus the sorted distinct values."""
    ranks = rank_values(v for row in rows for v in row)
    values = sorted(ranks, key=ranks.__getitem__)
    n = len(rows)
    out = np.zeros((n, n), dtype=np.int64)
    for i, row in enumerate(rows):
        out[i] = [ranks[v] for v in row]
    return out, values


def _first_max_violation(r: np.ndarray) -> tuple[int, int, int] | None:
    # first (x, y, z) with r[x, z] > max(r[x, y], r[y, z])
    for x in range(r.shape[0]):
        bad = r[x][None, :] > np.maximum(r[x][:, None], r)
        if bad.any():
            y, z = np.argwhere(bad)[0]
            return x, int(y), int(z)
    return None


def _power_le_sum(a: Fraction, b: Fraction, c: Fraction, tau: Fraction, max_bits: int = 4096) -> bool:
    """Decide ``a**tau <= b**tau + c**tau`` exactly for rational ``tau > 0``."""
    num, den = tau.numerator, tau.denominator
    if den == 1:
        return a**num <= b**num + c**num
    roots = [exact_root(v, den) for v in (a, b, c)]
    if all(r is not None for r in roots):
        ra, rb, rc = roots
        return ra**num <= rb**num + rc**num
    bits = 32
    while bits <= max_bits:
        (alo, ahi), (blo, bhi), (clo, chi) = (root_bounds(v, den, bits) for v in (a, b, c))
        if ahi**num <= blo**num + clo**num:
            return True
        if alo**num > bhi**num + chi**num:
            return False
        bits *= 2
    raise ArithmeticError(f"cannot separate {a}^{tau} from {b}^{tau} + {c}^{tau} at {max_bits} bits")


def _first_triangle_violation(rows: list[list[Fraction]], tau: Fraction):
    n = len(rows)
    if tau == 1:
        d = np.empty((n, n), dtype=object)
        for i, row in enumerate(rows):
            d[i, :] = row
        for x in range(n):
            bad = d[x][None, :] > d[x][:, None] + d
            if bad.any():
                y, z = np.argwhere(bad)[0]
                return x, int(y), int(z)
        return None
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if x == z or y in (x, z):
                    continue
                if not _power_le_sum(rows[x][z], rows[x][y], rows[y][z], tau):
                    return x, y, z
    return None


def audit(dist: Sequence[Sequence], tau: Fraction | int = 1, labels: Sequence | None = None) -> AxiomReport:
    """Check the metric and ultrametric inequalities for ``dist**tau`` over all triples.

    ``dist`` must be square, zero on the diagonal, symmetric, and positive
    off the diagonal; otherwise :class:`MatrixError` names the first defect.
    Non-integer ``tau`` is handled without ever forming an irrational
    number: see :func:`_power_le_sum`.
    """
    tau = as_fraction(tau)
    if tau <= 0:
        raise ValueError(f"tau must be positive, got {tau}")
    rows = _as_matrix(dist)
    names = list(labels) if labels is not None else list(range(len(rows)))
    if not rows:
        return AxiomReport(True, True)
    # t -> t**tau is increasing, so the max-inequality for d**tau is the one for d
    ranks, _ = rank_matrix(rows)
    ultra = _first_max_violation(ranks)
    if ultra is None:
        return AxiomReport(True, True)
    tri = _first_triangle_violation(rows, tau)
    if tri is not None:
        return AxiomReport(False, False, tuple(names[i] for i in tri))
    return AxiomReport(True, False, tuple(names[i] for i in ultra))


def max_inequality_ratio(dist: Sequence[Sequence]) -> Fraction:
    """``max d(x,z) / max(d(x,y), d(y,z))`` over triples with ``x != z``.

    Equal to 1 exactly for ultrametrics (the choice ``y = x`` gives 1).
    The worst ``y`` for each pair is found on ranks; the ratio is exact.
    """
    rows = _as_matrix(dist)
    n = len(rows)
    if n < 2:
        return Fraction(1)
    r, values = rank_matrix(rows)
    best = Fraction(1)
    for x in range(n):
        minimax = np.maximum(r[x][:, None], r).min(axis=0)
        for z in range(n):
            if z != x:
                best = max(best, rows[x][z] / values[minimax[z]])
    return best


class FiniteMetricSpace:
    """Labelled points with an exact, validated distance matrix.

    Construction runs :func:`audit`; a matrix that is not a metric raises
    :class:`MetricError` naming the violated axiom and a witness triple.
    Instances are treated as immutable.
    """

    def __init__(self, labels: Iterable[Hashable], dist: Sequence[Sequence]):
        labels = tuple(labels)
        if len(set(labels)) != len(labels):
            raise MatrixError("point labels must be distinct")
        if len(labels) != len(dist):
            raise MatrixError(f"{len(labels)} labels for a {len(dist)}-row matrix")
        self.report = audit(dist, labels=labels)
        if not self.report.is_metric:
            x, y, z = self.report.witness
            raise MetricError(f"triangle inequality fails: d({x},{z}) > d({x},{y}) + d({y},{z})")
        self.labels = labels
        self.dist = tuple(tuple(as_fraction(v) for v in row) for row in dist)
        self._index = {label: i for i, label in enumerate(labels)}
        self._masks: dict[int, tuple[int, ...]] = {}
        self._ranked: tuple[np.ndarray, list[Fraction]] | None = None

    @classmethod
    def from_points(cls, points: Sequence, metric: Callable, labels: Sequence | None = None):
        """Build from sample points and an exact metric ``metric(p, q)``."""
        n = len(points)
        dist = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                dist[i][j] = dist[j][i] = as_fraction(metric(points[i], points[j]))
        return cls(labels if labels is not None else [str(p) for p in points], dist)

    def __len__(self) -> int:
        return len(self.labels)

    def __repr__(self) -> str:
        return f"FiniteMetricSpace({len(self.labels)} points, ultrametric={self.report.is_ultrametric})"

    @property
    def is_ultrametric(self) -> bool:
        return self.report.is_ultrametric

    def index(self, label: Hashable) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"unknown point {label!r}") from None

    def d(self, x: Hashable, y: Hashable) -> Fraction:
        return self.dist[self.index(x)][self.index(y)]

    def distances(self) -> list[Fraction]:
        """Sorted distinct distances, 0 included."""
        return list(self.ranked()[1])

    def ranked(self) -> tuple[np.ndarray, list[Fraction]]:
        """Integer rank matrix of the distances and the sorted distinct values (cached)."""
        if self._ranked is None:
            self._ranked = rank_matrix([list(row) for row in self.dist])
        return self._ranked

    def ball_masks(self, radius: Fraction, closed: bool) -> tuple[int, ...]:
        """Bitmask of each point's ball of the given radius, indexed by centre."""
        ranks, values = self.ranked()
        # d < r iff rank(d) < bisect_left(values, r); d <= r uses bisect_right
        cut = (bisect_right if closed else bisect_left)(values, radius)
        masks = self._masks.get(cut)
        if masks is None:
            bits = np.packbits(ranks < cut, axis=1, bitorder="little")
            masks = self._masks[cut] = tuple(int.from_bytes(row.tobytes(), "little") for row in bits)
        return masks

    def ball_mask(self, center: int, radius: Fraction, closed: bool) -> int:
        """Bitmask of the points within ``radius`` of point index ``center``."""
        return self.ball_masks(radius, closed)[center]

    def labels_of(self, mask: int) -> frozenset:
        return frozenset(label for j, label in enumerate(self.labels) if mask >> j & 1)


def parse_matrix(text: str) -> FiniteMetricSpace:
    """Parse the distance-matrix text format (see module docstring)."""
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise MatrixError("empty matrix file")
    try:
        n = int(lines[0])
    except ValueError:
        raise MatrixError(f"first line must be the point count, got {lines[0]!r}") from None
    if len(lines) != n + 2:
        raise MatrixError(f"expected {n + 2} nonblank lines for {n} points, got {len(lines)}")
    labels = lines[1].split()
    if len(labels) != n:
        raise MatrixError(f"expected {n} labels, got {len(labels)}")
    rows = []
    for i, line in enumerate(lines[2:]):
        fields = line.split()
        if len(fields) != n:
            raise MatrixError(f"row {i} has {len(fields)} entries, expected {n}")
        rows.append([as_fraction(f) for f in fields])
    return FiniteMetricSpace(labels, rows)


def read_matrix(path: str | Path) -> FiniteMetricSpace:
    return parse_matrix(Path(path).read_text())


def format_matrix(space: FiniteMetricSpace) -> str:
    lines = [str(len(space)), " ".join(map(str, space.labels))]
    lines += [" ".join(format_fraction(v) for v in row) for row in space.dist]
    return "\n".join(lines) + "\n"
