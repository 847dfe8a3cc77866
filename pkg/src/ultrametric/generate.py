"""Random finite ultrametric spaces for sweeps and demos.

Two constructions: points sampled from a sequence space with ``d_rho``,
and random dendrograms whose merge heights come from a short decreasing
list of levels.  Both are validated on construction like any other space.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from ._exact import Rational, as_fraction
from .seqspace import BINARY, Alphabet, SymbolSequence, d_rho
from .space import FiniteMetricSpace

__all__ = ["random_dendrogram_space", "random_sequence", "sequence_space_sample"]


def random_sequence(rng: random.Random, prefix_len: int, alphabet: Alphabet = BINARY) -> SymbolSequence:
    """A random prefix of the given length followed by a random constant tail."""
    prefix = [rng.randrange(alphabet.size) for _ in range(prefix_len)]
    return SymbolSequence.constant(rng.randrange(alphabet.size), prefix, alphabet)


def sequence_space_sample(
    n: int,
    rng: random.Random,
    rho: Rational = Fraction(1, 2),
    prefix_len: int = 8,
    alphabet: Alphabet = BINARY,
) -> FiniteMetricSpace:
    """Up to ``n`` distinct random sequences under ``d_rho``."""
    seen: dict[SymbolSequence, None] = {}
    for _ in range(20 * n):
        if len(seen) == n:
            break
        seen.setdefault(random_sequence(rng, prefix_len, alphabet))
    points = list(seen)
    rho = as_fraction(rho)
    return FiniteMetricSpace.from_points(points, lambda a, b: d_rho(a, b, rho).exact())


def random_dendrogram_space(
    n: int,
    rng: random.Random,
    levels: Sequence[Rational] | None = None,
) -> FiniteMetricSpace:
    """``n`` leaves of a random tree; two leaves are at the height of their lowest common split.

    ``levels`` (strictly decreasing, positive) are the heights used from the
    root downwards; by default eight random rationals.
    """
    if levels is None:
        cuts = sorted({Fraction(rng.randint(1, 999), rng.randint(1, 99)) for _ in range(8)}, reverse=True)
        levels = cuts
    levels = [as_fraction(v) for v in levels]
    dist = [[Fraction(0)] * n for _ in range(n)]

    def split(block: list[int], depth: int) -> None:
        if len(block) < 2:
            return
        if depth == len(levels) - 1:
            groups = [[i] for i in block]
        else:
            k = rng.randint(2, min(4, len(block)))
            rng.shuffle(block)
            cuts = sorted(rng.sample(range(1, len(block)), k - 1))
            groups = [block[a:b] for a, b in zip([0] + cuts, cuts + [len(block)])]
        h = levels[depth]
        for g1 in range(len(groups)):
            for g2 in range(g1 + 1, len(groups)):
                for i in groups[g1]:
                    for j in groups[g2]:
                        dist[i][j] = dist[j][i] = h
        for g in groups:
            split(g, depth + 1)

    split(list(range(n)), 0)
    return FiniteMetricSpace([f"p{i}" for i in range(n)], dist)
