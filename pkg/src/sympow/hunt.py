"""Seeded random search for packing/equality disagreements.

Whether k-packed is equivalent to I^(n) = I^n for all n <= k is settled for
edge ideals (yes, every k) and for k = 2 (yes, every square-free ideal),
but open for cubic generators and for k = 3.  The hunt draws seeded random
square-free ideals from a chosen family, evaluates both predicates, and
records any disagreement.  An empty disagreement list is the expected
outcome and is reported as data, never as a proof.

Each instance derives its own random stream from (seed, index) through
SHA-256, so results are independent of scheduling and stable across runs
and platforms.
"""

from __future__ import annotations

import hashlib
import itertools
import random
from dataclasses import dataclass

from .monomials import MonomialIdeal
from .packing import is_k_packed
from .symbolic import equals_ordinary

FAMILIES = ("edge_ideals", "cubic_ideals", "general_squarefree")

MAX_HUNT_VARS = 8


@dataclass(frozen=True)
class HuntConfig:
    num_vars: int
    max_generators: int
    k: int
    family: str
    seed: int
    instance_count: int

    def __post_init__(self) -> None:
        if not 2 <= self.num_vars <= MAX_HUNT_VARS:
            raise ValueError(f"num_vars must be between 2 and {MAX_HUNT_VARS}")
        if self.max_generators < 1:
            raise ValueError("max_generators must be positive")
        if self.k not in (2, 3):
            raise ValueError("k must be 2 or 3")
        if self.family not in FAMILIES:
            raise ValueError(f"family must be one of {FAMILIES}")
        if self.instance_count < 1:
            raise ValueError("instance_count must be positive")
        if self.family == "cubic_ideals" and self.num_vars < 3:
            raise ValueError("cubic generators need at least 3 variables")


def instance_rng(seed: int, index: int) -> random.Random:
    """Deterministic per-instance stream derived from (seed, index)."""
    digest = hashlib.sha256(f"{seed}:{index}".encode("ascii")).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def random_squarefree_ideal(
    num_vars: int,
    max_generators: int,
    rng: random.Random,
    family: str = "general_squarefree",
) -> tuple[MonomialIdeal, int]:
    """One random square-free ideal and the number of degenerate redraws.

    Generator supports are drawn uniformly among subsets of the configured
    size for the family (pairs, triples, or arbitrary sizes), then
    minimalized.  A draw that collapses to the zero or unit ideal is
    redrawn and counted.
    """
    if family not in FAMILIES:
        raise ValueError(f"family must be one of {FAMILIES}")
    redraws = 0
    while True:
        if family == "edge_ideals":
            pool = list(itertools.combinations(range(num_vars), 2))
            count = rng.randint(1, min(max_generators, len(pool)))
            supports = rng.sample(pool, count)
        elif family == "cubic_ideals":
            pool = list(itertools.combinations(range(num_vars), 3))
            count = rng.randint(1, min(max_generators, len(pool)))
            supports = rng.sample(pool, count)
        else:
            count = rng.randint(1, max_generators)
            supports = []
            for _ in range(count):
                size = rng.randint(1, num_vars)
                supports.append(tuple(sorted(rng.sample(range(num_vars), size))))
        gens = []
        for support in supports:
            vec = [0] * num_vars
            for v in support:
                vec[v] = 1
            gens.append(tuple(vec))
        ideal = MonomialIdeal.from_generators(num_vars, gens)
        if not ideal.is_zero and not ideal.is_unit:
            return ideal, redraws
        redraws += 1


def run_hunt(config: HuntConfig) -> dict:
    """Evaluate both predicates on every instance; report disagreements."""
    disagreements = []
    total_redraws = 0
    for index in range(config.instance_count):
        rng = instance_rng(config.seed, index)
        ideal, redraws = random_squarefree_ideal(
            config.num_vars, config.max_generators, rng, config.family
        )
        total_redraws += redraws
        packed = is_k_packed(ideal, config.k).holds
        equality = all(
            equals_ordinary(ideal, n).equal for n in range(1, config.k + 1)
        )
        if packed != equality:
            disagreements.append(
                {
                    "index": index,
                    "generators": [list(g.exponents) for g in ideal.generators],
                    "k_packed": packed,
                    "powers_equal_up_to_k": equality,
                }
            )
    return {
        "family": config.family,
        "k": config.k,
        "num_vars": config.num_vars,
        "max_generators": config.max_generators,
        "instance_count": config.instance_count,
        "seed": config.seed,
        "degenerate_redraws": total_redraws,
        "disagreements": disagreements,
    }
