"""Minimal primes of square-free monomial ideals via minimal vertex covers.

For a square-free monomial ideal the associated primes coincide with the
minimal primes, and each minimal prime (x_i : i in C) corresponds to an
inclusion-minimal transversal C of the support clutter of the generators.
Height and big height are the extreme cardinalities of those covers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import SizeGuardExceeded
from .monomials import MonomialIdeal

DEFAULT_MAX_PRIMES = 100_000


@dataclass(frozen=True)
class Clutter:
    """An antichain of vertex subsets: the support hypergraph of an ideal.

    The unit ideal is represented by a single empty edge; the zero ideal by
    no edges at all.
    """

    num_vertices: int
    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.num_vertices <= 0:
            raise ValueError("num_vertices must be positive")
        edges = tuple(sorted(tuple(sorted(set(e))) for e in self.edges))
        object.__setattr__(self, "edges", edges)
        for e in edges:
            if e and (e[0] < 0 or e[-1] >= self.num_vertices):
                raise ValueError(f"edge {e} out of range")
        sets = [set(e) for e in edges]
        for i, a in enumerate(sets):
            for j, b in enumerate(sets):
                if i != j and a <= b:
                    raise ValueError("edges must form an antichain")

    @property
    def is_unit(self) -> bool:
        return self.edges == ((),)


def to_clutter(ideal: MonomialIdeal) -> Clutter:
    """Support clutter of a square-free ideal; rejects non-square-free input."""
    if not ideal.is_squarefree:
        raise ValueError("ideal is not square-free")
    return Clutter(ideal.num_vars, tuple(g.support for g in ideal.generators))


def minimal_transversals(
    edges: Sequence[Iterable[int]], max_count: int = DEFAULT_MAX_PRIMES
) -> list[tuple[int, ...]]:
    """All inclusion-minimal transversals (hitting sets) of a set system.

    Incremental construction: fold edges in one at a time, extending every
    transversal that misses the new edge by each of its vertices, then prune
    non-minimal sets.  Exact and adequate for a few dozen edges.
    """
    family: list[frozenset[int]] = [frozenset()]
    for edge in edges:
        edge_set = frozenset(edge)
        if not edge_set:
            raise ValueError("cannot hit an empty edge")
        extended: set[frozenset[int]] = set()
        for trans in family:
            if trans & edge_set:
                extended.add(trans)
            else:
                for v in edge_set:
                    extended.add(trans | {v})
        family = _prune_supersets(extended)
        if len(family) > max_count:
            raise SizeGuardExceeded(
                f"more than {max_count} minimal transversals; raise the guard to proceed"
            )
    return sorted(tuple(sorted(t)) for t in family)


def _prune_supersets(sets: set[frozenset[int]]) -> list[frozenset[int]]:
    ordered = sorted(sets, key=len)
    kept: list[frozenset[int]] = []
    for cand in ordered:
        if not any(small <= cand for small in kept):
            kept.append(cand)
    return kept


@lru_cache(maxsize=4096)
def minimal_primes(
    ideal: MonomialIdeal, max_primes: int = DEFAULT_MAX_PRIMES
) -> tuple[tuple[int, ...], ...]:
    """Minimal primes of a proper nonzero square-free ideal.

    Each returned tuple C of variable indices encodes the monomial prime
    (x_i : i in C); the result is sorted for a deterministic representation.
    """
    if not ideal.is_squarefree:
        raise ValueError("ideal is not square-free")
    if ideal.is_zero:
        raise ValueError("the zero ideal has no minimal primes over it")
    if ideal.is_unit:
        raise ValueError("the unit ideal has no minimal primes")
    covers = minimal_transversals(
        [g.support for g in ideal.generators], max_count=max_primes
    )
    return tuple(covers)


def height(ideal: MonomialIdeal, max_primes: int = DEFAULT_MAX_PRIMES) -> int:
    """Minimum cardinality of a minimal prime: the vertex cover number."""
    return min(len(c) for c in minimal_primes(ideal, max_primes))


def big_height(ideal: MonomialIdeal, max_primes: int = DEFAULT_MAX_PRIMES) -> int:
    """Maximum cardinality of a minimal prime."""
    return max(len(c) for c in minimal_primes(ideal, max_primes))
