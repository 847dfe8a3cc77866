"""Acceptance gate: thirteen exact, zero-tolerance checks.

Each test carries a ``criterion`` marker; the terminal summary prints one
PASS/FAIL line per criterion.  All verdicts use exact rationals or integer
ranks of exact rationals, never floats.
"""

import itertools
import random
from fractions import Fraction as F

import numpy as np
import pytest

from helpers import euclidean
from ultrametric.balls import (
    Ball,
    Relation,
    all_balls,
    ball_members,
    ball_union,
    center_invariance,
    classify_balls,
    complement_separation,
    radius_grid,
    relation_matrix,
    union_mismatches,
)
from ultrametric.cantor import phi, phi_ball_image, psi, psi_decode
from ultrametric.dyadic import DyadicInterval, classify_dyadic, dyadic_phi_correspondence
from ultrametric.generate import random_dendrogram_space, sequence_space_sample
from ultrametric.metricprops import cauchy_chain_check, chain_violations, quasi_bound_check, snowflake
from ultrametric.padic import abs_p, dist_p, series_sum, to_padic, valuation
from ultrametric.seqspace import (
    BiSequence,
    ScaleTable,
    SymbolSequence,
    agreement_depth,
    bi_agreement_depth,
    bishift,
    d_general,
    d_rho,
    d_rho_bi,
    embed,
    format_sequence,
    parse_sequence,
    shift_insert,
)

criterion = pytest.mark.criterion
PRIMES = (2, 3, 5, 7, 11)
HALF, THIRD = F(1, 2), F(1, 3)


# ---------------------------------------------------------------- oracles


def valuation_oracle(x: F, p: int) -> float:
    # repeated division, separately on numerator and denominator
    if x == 0:
        return float("inf")

    def v(n):
        k = 0
        while n % p == 0:
            n //= p
            k += 1
        return k

    return v(abs(x.numerator)) - v(x.denominator)


def abs_oracle(x: F, p: int) -> F:
    return F(0) if x == 0 else F(p) ** -valuation_oracle(x, p)


def first_difference(a: SymbolSequence, b: SymbolSequence, horizon: int = 40):
    # 1-based index of the first differing term, by direct term comparison
    for i in range(1, horizon + 1):
        if a[i] != b[i]:
            return i
    return None


def ranked(values: np.ndarray) -> np.ndarray:
    # order-preserving integer ranks of an object array of exact rationals
    order = {v: k for k, v in enumerate(sorted(set(values.ravel())))}
    return np.vectorize(order.__getitem__, otypes=[np.int64])(values)


def max_inequality_holds(r: np.ndarray) -> bool:
    # r[x, z] <= max(r[x, y], r[y, z]) for every triple
    return all(not (r[x][None, :] > np.maximum(r[x][:, None], r)).any() for x in range(r.shape[0]))


def random_rational(rng: random.Random, bound: int = 10**6) -> F:
    return F(rng.randint(-bound, bound), rng.randint(1, bound))


# ---------------------------------------------------------------- shared data


@pytest.fixture(scope="module")
def family():
    """Every binary sequence with a prefix of length <= 8 and a constant tail.

    Shorter prefixes are absorbed into the constant tail, so the canonical
    family has 2**8 * 2 = 512 distinct members.
    """
    seqs = {
        SymbolSequence.constant(tail, bits)
        for n in range(9)
        for bits in itertools.product((0, 1), repeat=n)
        for tail in (0, 1)
    }
    assert len(seqs) == 512
    return sorted(seqs, key=format_sequence)


@pytest.fixture(scope="module")
def pairs(family):
    return list(itertools.combinations(family, 2))


@pytest.fixture(scope="module")
def spaces():
    """Sixty validated ultrametric spaces with 1 to 64 points, built two ways."""
    rng = random.Random(20240611)
    out = []
    for k in range(30):
        out.append(random_dendrogram_space(rng.randint(1, 64) if k else 64, rng))
        out.append(sequence_space_sample(rng.randint(2, 64) if k else 64, rng, rho=rng.choice((HALF, THIRD))))
    assert all(s.is_ultrametric and len(s) <= 64 for s in out)
    return out


# ---------------------------------------------------------------- p-adic


@criterion(1, "p-adic ultrametric inequality and multiplicativity, 10,000 samples per prime")
def test_padic_inequality_and_multiplicativity():
    rng = random.Random(1)
    for p in PRIMES:
        for _ in range(10_000):
            x, y, z = (random_rational(rng) for _ in range(3))
            if rng.random() < 0.05:
                x = F(0)
            ax, ay = abs_p(x, p), abs_p(y, p)
            assert (ax, ay) == (abs_oracle(x, p), abs_oracle(y, p))
            assert abs_p(x + y, p) <= max(ax, ay)
            assert abs_p(x * y, p) == ax * ay
            assert dist_p(x, z, p) <= max(dist_p(x, y, p), dist_p(y, z, p))
            assert abs_p(x.numerator, p) <= 1


@criterion(2, "geometric series identity (1-p) * sum p^j == 1 mod p^48")
@pytest.mark.parametrize("p", (2, 3, 5))
def test_geometric_series(p):
    n = 48
    total, _ = series_sum([F(p) ** j for j in range(n + 1)], p, n)
    product = to_padic(1 - p, p, n) * total
    assert product.congruent(1)
    assert valuation_oracle(product.to_fraction() - 1, p) >= n
    # the exact partial sum gives 1 - p^(N+1)
    assert (1 - p) * sum(F(p) ** j for j in range(n + 1)) == 1 - F(p) ** (n + 1)


@criterion(3, "to_padic round trip modulo p^(v+N), 1,000 rationals per prime")
def test_to_padic_round_trip():
    rng = random.Random(3)
    for p in PRIMES:
        for _ in range(1000):
            x = random_rational(rng)
            if x == 0:
                continue
            x *= F(p) ** rng.randint(-10, 10)
            n = rng.randint(1, 40)
            value = to_padic(x, p, n)
            v = valuation_oracle(x, p)
            assert value.v == v == valuation(x, p)
            assert len(value.digits) == n and value.digits[0] != 0
            assert valuation_oracle(x - value.to_fraction(), p) >= v + n
            assert value.congruent(x)


# ---------------------------------------------------------------- sequences


NONGEOMETRIC = ScaleTable((1, F(3, 4), F(2, 3), F(1, 3), F(1, 4), F(1, 7), F(1, 8), F(1, 20), F(1, 21)), ratio=F(1, 5))


@criterion(4, "sequence-space max-inequality, exhaustive family, rho in {1/2,1/3,2/3} and a non-geometric scale")
def test_sequence_ultrametric(family):
    n = len(family)
    depth = np.full((n, n), -1, dtype=np.int64)
    for i, j in itertools.combinations(range(n), 2):
        k = agreement_depth(family[i], family[j])
        assert k == first_difference(family[i], family[j]) - 1
        depth[i, j] = depth[j, i] = k
    assert depth.max() == 8
    metrics = [lambda a, b, r=r: d_rho(a, b, r) for r in (HALF, THIRD, F(2, 3))]
    metrics.append(lambda a, b: d_general(a, b, NONGEOMETRIC))
    for metric in metrics:
        dist = np.full((n, n), F(0), dtype=object)
        for i, j in itertools.combinations(range(n), 2):
            dist[i, j] = dist[j, i] = metric(family[i], family[j]).exact()
        assert all(dist[i, j] > 0 for i, j in itertools.combinations(range(n), 2))
        assert max_inequality_holds(ranked(dist))


@criterion(5, "shift scaling: depth +1 and d scaled by rho under shift_insert and bishift")
def test_shift_scaling(family):
    embedded = {a: embed(a) for a in family}
    shifted = {a: bishift(embedded[a]) for a in family}
    inserted = {(s, a): shift_insert(s, a) for s in (0, 1) for a in family}
    for a, b in itertools.combinations(family, 2):
        k = agreement_depth(a, b)
        ea, eb, sa, sb = embedded[a], embedded[b], shifted[a], shifted[b]
        assert bi_agreement_depth(ea, eb) == k
        assert bi_agreement_depth(sa, sb) == k + 1
        assert d_rho_bi(sa, sb, F(2, 3)).exact() == F(2, 3) * d_rho_bi(ea, eb, F(2, 3)).exact()
        for s in (0, 1):
            ta, tb = inserted[s, a], inserted[s, b]
            assert agreement_depth(ta, tb) == k + 1
            assert d_rho(ta, tb, THIRD).exact() == THIRD * d_rho(a, b, THIRD).exact()
    # a negative start: shifting a two-sided sequence leftwards lowers the depth
    a, b = BiSequence(-2, parse_sequence("1;c0")), BiSequence(-2, parse_sequence("0;c0"))
    assert bi_agreement_depth(a, b) == -2
    assert bi_agreement_depth(bishift(a, -1), bishift(b, -1)) == -3


# ---------------------------------------------------------------- Cantor


@criterion(6, "|phi(a) - phi(b)| <= d_1/2(a, b), exhaustive family")
def test_phi_lipschitz(family, pairs):
    values = {a: phi(a) for a in family}
    for a, b in pairs:
        assert abs(values[a] - values[b]) <= d_rho(a, b, HALF).exact()


@criterion(7, "d/3 <= |psi(a) - psi(b)| <= d for d = d_1/3, lower bound attained")
def test_psi_bilipschitz(family, pairs):
    values = {a: psi(a) for a in family}
    attained = 0
    for a, b in pairs:
        d = d_rho(a, b, THIRD).exact()
        gap = abs(values[a] - values[b])
        assert d / 3 <= gap <= d
        attained += gap == d / 3
    assert attained > 0
    a, b = parse_sequence("1;c0"), parse_sequence("0;c1")
    assert abs(psi(a) - psi(b)) == F(1, 3) == d_rho(a, b, THIRD).exact() / 3


def in_cantor_oracle(x: F) -> bool:
    """x in [0, 1] avoids every removed open middle third.

    A removed interval at some stage is ``frac(3**k * x)`` landing strictly
    between 1/3 and 2/3; the orbit of a rational under ``frac(3 * .)`` is
    eventually periodic, so it is followed until a state repeats.
    """
    if not 0 <= x <= 1:
        return False
    seen = set()
    y = x - (x.numerator // x.denominator) if x < 1 else F(0)
    while y not in seen:
        if F(1, 3) < y < F(2, 3):
            return False
        seen.add(y)
        y = 3 * y
        y -= y.numerator // y.denominator
    return True


@criterion(8, "psi_decode(psi(b)) == b on the family; non-Cantor rationals rejected")
def test_psi_decode(family):
    for b in family:
        assert in_cantor_oracle(psi(b))
        assert psi_decode(psi(b)) == b
    assert psi_decode(HALF) is None
    rejected = accepted = 0
    for q in range(1, 82):
        for p in range(q + 1):
            x = F(p, q)
            decoded = psi_decode(x)
            if in_cantor_oracle(x):
                assert psi(decoded) == x
                accepted += 1
            else:
                assert decoded is None
                rejected += 1
    assert rejected > 1000 and accepted > 20
    for x in (F(-1, 3), F(4, 3), F(7, 5)):
        assert psi_decode(x) is None


# ---------------------------------------------------------------- balls


@criterion(9, "ball trichotomy and union on 60 ultrametric spaces; Euclidean witness is incomparable")
def test_ball_trichotomy_and_union(spaces):
    incomparable = list(Relation).index(Relation.INCOMPARABLE)
    rng = random.Random(9)
    for space in spaces:
        balls = all_balls(space)
        assert not (relation_matrix(space, balls) == incomparable).any()
        assert len(union_mismatches(space, balls)) == 0
        # direct per-pair calls: one ball per distinct member set, plus random pairs
        reps = {}
        for ball in balls:
            reps.setdefault(ball_members(space, ball), ball)
        for b1, b2 in itertools.product(reps.values(), repeat=2):
            assert classify_balls(space, b1, b2) is not Relation.INCOMPARABLE
        for _ in range(500):
            b1, b2 = rng.choice(balls), rng.choice(balls)
            s1, s2 = ball_members(space, b1), ball_members(space, b2)
            u = ball_union(space, b1, b2)
            if s1 & s2:
                assert ball_members(space, u) == s1 | s2
            else:
                assert u is None
    line = euclidean([0, 1, 2])
    assert classify_balls(line, Ball("0", 2), Ball("2", 2)) is Relation.INCOMPARABLE


@criterion(10, "center invariance and complement separation on every space, fail on Euclidean witnesses")
def test_center_invariance_and_separation(spaces):
    checked = 0
    for space in spaces:
        grid = radius_grid(space)
        for w in space.labels:
            for t in grid:
                assert center_invariance(space, w, t)
                assert complement_separation(space, w, t)
                checked += 1
    assert checked > 10_000
    assert not center_invariance(euclidean([0, 1, 2]), "0", 1)
    assert not complement_separation(euclidean([0, HALF, 1]), "0", 1)


# ---------------------------------------------------------------- snowflake


def quasi_oracle(space, tau: F) -> bool:
    a, b = tau.numerator, tau.denominator
    for x, y, z in itertools.permutations(space.labels, 3):
        if space.d(x, z) ** a > 2**b * max(space.d(x, y), space.d(y, z)) ** a:
            return False
    return True


@criterion(11, "d^tau stays ultrametric for tau in {1/2,2,3}; Euclidean tau=2 deficit 4 > 2; quasi-bound holds")
def test_snowflake(spaces):
    for space in spaces:
        for tau in (HALF, F(2), F(3)):
            report = snowflake(space, tau).report
            assert report.is_metric and report.is_ultrametric
        for tau in (HALF, F(2), F(3)):
            assert quasi_bound_check(space, tau)
    small = [s for s in spaces if len(s) <= 12]
    for space in small:
        for tau in (HALF, F(3)):
            assert quasi_oracle(space, tau)
    line = euclidean([0, 1, 2])
    flake = snowflake(line, 2)
    assert not flake.report.is_metric
    assert line.d("0", "2") ** 2 == 4 > line.d("0", "1") ** 2 + line.d("1", "2") ** 2 == 2
    with pytest.raises(ValueError):
        quasi_bound_check(line, 2)
    rng = random.Random(11)
    for _ in range(25):
        points = sorted({F(rng.randint(-50, 50), rng.randint(1, 6)) for _ in range(rng.randint(3, 7))})
        if len(points) < 3:
            continue
        space = euclidean(points)
        for tau in (HALF, F(1)):
            assert snowflake(space, tau).report.is_metric
            assert quasi_bound_check(space, tau) is quasi_oracle(space, tau) is True


# ---------------------------------------------------------------- dyadic


@criterion(12, "dyadic trichotomy for |i| <= 64, |l| <= 6; phi correspondence to depth 8")
def test_dyadic():
    cells = [DyadicInterval(i, l) for i in range(-64, 65) for l in range(-6, 7)]
    seen = set()
    for a in cells:
        for b in cells:
            verdict = classify_dyadic(a, b)
            assert verdict is not Relation.INCOMPARABLE
            if verdict is Relation.SUBSET12:
                assert a.l <= b.l
            seen.add(verdict)
    assert seen == {Relation.DISJOINT, Relation.SUBSET12, Relation.SUBSET21, Relation.EQUAL}
    for depth in range(9):
        for bits in itertools.product((0, 1), repeat=depth):
            for tail in (0, 1):
                center = SymbolSequence.constant(tail, bits)
                cell, image = dyadic_phi_correspondence(center, depth)
                assert cell.closure() == image == phi_ball_image(center, depth)
                assert image.lo == sum(F(b, 2 ** (k + 1)) for k, b in enumerate(bits))
                assert image.length == F(1, 2**depth)
    for start in (-3, -2, -1):
        for bits in itertools.product((0, 1), repeat=4):
            center = BiSequence(start, SymbolSequence.constant(0, bits))
            for depth in range(start, 9):
                cell, image = dyadic_phi_correspondence(center, depth)
                assert cell.closure() == image and image.length == F(2) ** -depth


# ---------------------------------------------------------------- chains


@criterion(13, "Cauchy chain inequality on 1,000 sampled chains; Euclidean counter-sample flagged")
def test_cauchy_chains(spaces):
    rng = random.Random(13)
    usable = [s for s in spaces if len(s) >= 2]
    for _ in range(1000):
        space = rng.choice(usable)
        chain = [rng.choice(space.labels) for _ in range(rng.randint(2, 24))]
        assert cauchy_chain_check(space, chain)
        for j, l in itertools.combinations(range(len(chain)), 2):
            steps = [space.d(chain[k], chain[k + 1]) for k in range(j, l)]
            assert space.d(chain[j], chain[l]) <= max(steps)
    line = euclidean([0, 1, 2])
    assert chain_violations(line, ["0", "1", "2"]) == [(0, 2)]
    assert not cauchy_chain_check(line, ["0", "1", "2"])
