"""Shared fixtures, strategies, and independent brute-force oracles.

The oracles here deliberately avoid the library's algorithms: membership in
a power is decided by enumerating all products of generators, minimal
covers by scanning every vertex subset, matchings by trying every subset of
edges.  Tests freeze expected values computed by these oracles and compare
the fast implementations against them.
"""

from __future__ import annotations

import itertools
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from sympow import Monomial, MonomialIdeal
from sympow.hunt import instance_rng, random_squarefree_ideal

settings.register_profile(
    "repo",
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")

REPO_ROOT = Path(__file__).resolve().parent.parent
SAMPLE_INPUTS = REPO_ROOT / "sample_inputs"


def ideal_of(num_vars: int, *gens: tuple[int, ...]) -> MonomialIdeal:
    return MonomialIdeal.from_generators(num_vars, gens)


def mono(*exps: int) -> Monomial:
    return Monomial(tuple(exps))


def triangle_ideal() -> MonomialIdeal:
    return ideal_of(3, (1, 1, 0), (0, 1, 1), (1, 0, 1))


# ---------------------------------------------------------------------------
# independent oracles


def brute_power_membership(ideal: MonomialIdeal, m: Monomial, n: int) -> bool:
    """Enumerate every n-multiset of generators and test divisibility."""
    target = m.exponents
    for combo in itertools.combinations_with_replacement(ideal.generators, n):
        total = [0] * ideal.num_vars
        for g in combo:
            for i, e in enumerate(g.exponents):
                total[i] += e
        if all(a <= b for a, b in zip(total, target)):
            return True
    return False


def brute_minimal_covers(edges: list[set[int]], num_vertices: int) -> list[tuple[int, ...]]:
    """Scan all vertex subsets; keep the inclusion-minimal transversals."""
    covers = []
    for size in range(num_vertices + 1):
        for combo in itertools.combinations(range(num_vertices), size):
            s = set(combo)
            if all(s & e for e in edges):
                if not any(set(c) <= s for c in covers):
                    covers.append(combo)
    return sorted(covers)


def brute_max_matching(supports: list[set[int]]) -> int:
    """Try every subset of edges, keep the largest pairwise-disjoint one."""
    best = 0
    for size in range(len(supports), 0, -1):
        if size <= best:
            break
        for combo in itertools.combinations(supports, size):
            seen: set[int] = set()
            ok = True
            for s in combo:
                if s & seen:
                    ok = False
                    break
                seen |= s
            if ok:
                best = max(best, size)
                break
    return best


def brute_sr_complex_facets(ideal: MonomialIdeal) -> list[tuple[int, ...]]:
    """Maximal subsets carrying no generator support, by full subset scan."""
    n = ideal.num_vars
    supports = [set(g.support) for g in ideal.generators]
    faces = []
    for size in range(n + 1):
        for combo in itertools.combinations(range(n), size):
            s = set(combo)
            if not any(sup <= s for sup in supports):
                faces.append(s)
    facets = [f for f in faces if not any(f < g for g in faces)]
    return sorted(tuple(sorted(f)) for f in facets)


def box_monomials(num_vars: int, bound: int):
    for exps in itertools.product(range(bound + 1), repeat=num_vars):
        yield Monomial(exps)


# ---------------------------------------------------------------------------
# the shared seeded random-ideal sample (also used by the acceptance suite)

RANDOM_IDEAL_SEED = 20240817


def seeded_random_ideals(count: int, seed: int = RANDOM_IDEAL_SEED) -> list[MonomialIdeal]:
    """Deterministic square-free ideals on 2..6 variables."""
    ideals = []
    for index in range(count):
        rng = instance_rng(seed, index)
        num_vars = rng.randint(2, 6)
        ideal, _ = random_squarefree_ideal(
            num_vars, max_generators=6, rng=rng, family="general_squarefree"
        )
        ideals.append(ideal)
    return ideals


@pytest.fixture(scope="session")
def random_ideals_200() -> list[MonomialIdeal]:
    return seeded_random_ideals(200)
