"""Metric versus ultrametric: axiom checks, snowflakes and chain bounds.

Every verdict here is exact.  Powers ``d**tau`` with non-integer ``tau`` are
never evaluated as real numbers; inequalities between them are rewritten so
that only integer powers of rationals are compared.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Sequence

from ._exact import Rational, as_fraction, exact_root
from .space import AxiomReport, FiniteMetricSpace, audit, max_inequality_ratio

__all__ = [
    "AxiomReport",
    "Snowflake",
    "cauchy_chain_check",
    "chain_violations",
    "check_axioms",
    "discrete_space",
    "max_inequality_ratio",
    "quasi_bound_check",
    "snowflake",
]


def check_axioms(space: FiniteMetricSpace | Sequence[Sequence]) -> AxiomReport:
    """Exhaustive triple scan of a distance matrix (or an existing space).

    A malformed matrix raises :class:`~ultrametric.space.MatrixError`; a
    well-formed one always gets a report, metric or not.

    >>> str(check_axioms([[0, 1, 2], [1, 0, 1], [2, 1, 0]]))
    'metric=yes ultrametric=no witness=(0,1,2)'
    """
    if isinstance(space, FiniteMetricSpace):
        return audit(space.dist, labels=space.labels)
    return audit(space)


def discrete_space(n: int) -> FiniteMetricSpace:
    """``n`` points labelled ``0 .. n-1``, every pair at distance 1."""
    if n < 1:
        raise ValueError(f"need at least one point, got {n}")
    dist = [[Fraction(int(i != j)) for j in range(n)] for i in range(n)]
    return FiniteMetricSpace([str(i) for i in range(n)], dist)


@dataclass(frozen=True)
class Snowflake:
    """The candidate metric ``d**tau`` on the points of ``base``."""

    base: FiniteMetricSpace
    tau: Fraction
    report: AxiomReport

    def entry(self, x: Hashable, y: Hashable) -> Fraction | None:
        """``d(x, y)**tau`` if it is rational, else None."""
        root = exact_root(self.base.d(x, y), self.tau.denominator)
        return None if root is None else root**self.tau.numerator

    def matrix(self) -> list[list[Fraction]] | None:
        """The exact transformed matrix, or None if some entry is irrational."""
        out = []
        for x in self.base.labels:
            row = [self.entry(x, y) for y in self.base.labels]
            if any(v is None for v in row):
                return None
            out.append(row)
        return out

    def space(self) -> FiniteMetricSpace:
        """The transformed space; requires an exact matrix that is a metric."""
        m = self.matrix()
        if m is None:
            raise ValueError(f"d^{self.tau} has irrational entries")
        return FiniteMetricSpace(self.base.labels, m)


def snowflake(space: FiniteMetricSpace, tau: Rational | str) -> Snowflake:
    """Raise every distance to the power ``tau > 0`` and re-check the axioms."""
    tau = as_fraction(tau)
    if tau <= 0:
        raise ValueError(f"tau must be positive, got {tau}")
    report = audit(space.dist, tau=tau, labels=space.labels)
    return Snowflake(space, tau, report)


def quasi_bound_check(space: FiniteMetricSpace, tau: Rational | str) -> bool:
    """Check ``d(x,z) <= 2**(1/tau) * max(d(x,y), d(y,z))`` for all triples.

    Only meaningful when ``d**tau`` is a metric; that is verified first and
    a violation raises ValueError.  With ``tau = a/b`` the bound is
    compared as ``ratio**a <= 2**b`` for the worst ratio over triples.
    """
    tau = as_fraction(tau)
    flake = snowflake(space, tau)
    if not flake.report.is_metric:
        raise ValueError(f"d^{tau} is not a metric (witness {flake.report.witness})")
    ratio = max_inequality_ratio(space.dist)
    return ratio**tau.numerator <= 2**tau.denominator


def chain_violations(space: FiniteMetricSpace, points: Sequence[Hashable]) -> list[tuple[int, int]]:
    """Index pairs ``j < l`` where ``d(x_j, x_l)`` exceeds every consecutive step between them."""
    bad = []
    for j in range(len(points)):
        longest = Fraction(0)
        for k in range(j + 1, len(points)):
            longest = max(longest, space.d(points[k - 1], points[k]))
            if space.d(points[j], points[k]) > longest:
                bad.append((j, k))
    return bad


def cauchy_chain_check(space: FiniteMetricSpace, points: Sequence[Hashable]) -> bool:
    """``d(x_j, x_l) <= max(d(x_j, x_j+1), ..., d(x_l-1, x_l))`` for all ``j < l``."""
    return not chain_violations(space, points)
