"""Minors of square-free monomial ideals and the Koenig/packing predicates.

A minor is obtained by sending some variables to 0 (killing every generator
they touch) and others to 1 (deleting them from the generators).  An ideal
of height c is Koenig when it contains c generators with pairwise disjoint
supports, i.e. when the clutter's maximum matching meets its vertex cover
number; it has the packing property when every minor is Koenig.  The
k-bounded variants replace c by min(k, height).

Conventions for degenerate minors: the unit ideal (some generator collapsed
to 1) and the zero ideal (all generators killed) are both Koenig, matching
the clutter formulation in which such minors are discarded.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, NamedTuple

from .covers import height
from .errors import SizeGuardExceeded
from .monomials import Monomial, MonomialIdeal

KEEP = "keep"
ZERO = "zero"
ONE = "one"
_TAGS = (KEEP, ZERO, ONE)

DEFAULT_MAX_MINOR_SUPPORT = 15


@dataclass(frozen=True)
class MinorAssignment:
    """Per-variable tag in {keep, zero, one}."""

    tags: tuple[str, ...]

    def __post_init__(self) -> None:
        tags = tuple(self.tags)
        object.__setattr__(self, "tags", tags)
        for t in tags:
            if t not in _TAGS:
                raise ValueError(f"unknown tag {t!r}")

    @classmethod
    def identity(cls, num_vars: int) -> MinorAssignment:
        return cls((KEEP,) * num_vars)

    @classmethod
    def assign(
        cls, num_vars: int, zeros: tuple[int, ...] = (), ones: tuple[int, ...] = ()
    ) -> MinorAssignment:
        if set(zeros) & set(ones):
            raise ValueError("a variable cannot be sent to both 0 and 1")
        tags = [KEEP] * num_vars
        for v in zeros:
            tags[v] = ZERO
        for v in ones:
            tags[v] = ONE
        return cls(tuple(tags))

    @property
    def zeros(self) -> tuple[int, ...]:
        return tuple(i for i, t in enumerate(self.tags) if t == ZERO)

    @property
    def ones(self) -> tuple[int, ...]:
        return tuple(i for i, t in enumerate(self.tags) if t == ONE)

    @property
    def is_identity(self) -> bool:
        return all(t == KEEP for t in self.tags)

    def merge(self, later: MinorAssignment) -> MinorAssignment:
        """The single assignment equivalent to applying self, then later."""
        if len(later.tags) != len(self.tags):
            raise ValueError("assignments act on different variable counts")
        merged = tuple(
            first if first != KEEP else second
            for first, second in zip(self.tags, later.tags)
        )
        return MinorAssignment(merged)


def minor(ideal: MonomialIdeal, assignment: MinorAssignment) -> MonomialIdeal:
    """Apply a 0/1 assignment; the result keeps the ambient variable set."""
    if len(assignment.tags) != ideal.num_vars:
        raise ValueError("assignment does not match the ambient variable count")
    if not ideal.is_squarefree:
        raise ValueError("ideal is not square-free")
    tags = assignment.tags
    survivors = []
    for g in ideal.generators:
        exps = g.exponents
        if any(exps[v] and tags[v] == ZERO for v in range(len(exps))):
            continue
        survivors.append(
            tuple(0 if tags[v] == ONE else exps[v] for v in range(len(exps)))
        )
    return MonomialIdeal.from_generators(ideal.num_vars, survivors)


def max_regular_sequence(ideal: MonomialIdeal) -> tuple[int, tuple[Monomial, ...]]:
    """Longest monomial regular sequence in I, with one witness.

    Monomials in I with pairwise disjoint supports can be replaced by the
    generators dividing them, so this is the maximum matching of the support
    clutter.  Branch and bound over generators in canonical order: greedy
    matching as the incumbent, and a greedy hitting set of the remaining
    edges as the upper bound (disjoint edges need distinct hitting
    vertices).  The witness is the first maximum found, hence the
    lexicographically least index set.
    """
    if not ideal.is_squarefree:
        raise ValueError("ideal is not square-free")
    if ideal.is_zero or ideal.is_unit:
        return 0, ()
    supports = [frozenset(g.support) for g in ideal.generators]
    count = len(supports)

    def hitting_bound(start: int, used: frozenset[int]) -> int:
        remaining = [s for s in supports[start:] if not s & used]
        bound = 0
        while remaining:
            degrees: dict[int, int] = {}
            for s in remaining:
                for v in s:
                    degrees[v] = degrees.get(v, 0) + 1
            pick = max(sorted(degrees), key=lambda v: degrees[v])
            remaining = [s for s in remaining if pick not in s]
            bound += 1
        return bound

    best: list[int] = []
    chosen: list[int] = []

    def branch(idx: int, used: frozenset[int]) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        if idx == count:
            return
        if len(chosen) + hitting_bound(idx, used) <= len(best):
            return
        s = supports[idx]
        if not s & used:
            chosen.append(idx)
            branch(idx + 1, used | s)
            chosen.pop()
        branch(idx + 1, used)

    branch(0, frozenset())
    witness = tuple(ideal.generators[i] for i in best)
    return len(best), witness


@lru_cache(maxsize=1 << 16)
def is_koenig(ideal: MonomialIdeal) -> bool:
    """Matching number reaches the height; unit and zero ideals count as Koenig."""
    if ideal.is_zero or ideal.is_unit:
        return True
    matching, _ = max_regular_sequence(ideal)
    return matching >= height(ideal)


@lru_cache(maxsize=1 << 16)
def is_k_koenig(ideal: MonomialIdeal, k: int) -> bool:
    """Matching number reaches min(k, height)."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    if ideal.is_zero or ideal.is_unit:
        return True
    matching, _ = max_regular_sequence(ideal)
    return matching >= min(k, height(ideal))


class PackingResult(NamedTuple):
    holds: bool
    counterexample: MinorAssignment | None


def _every_minor(
    ideal: MonomialIdeal,
    predicate: Callable[[MonomialIdeal], bool],
    max_support: int,
) -> PackingResult:
    """Check a predicate on every minor of the ideal.

    Only variables in some generator support are varied; the others cannot
    change Koenig-ness of any minor.  Assignments are enumerated with
    keep < zero < one in variable-index order, and the first failing one is
    reported, so parallel schedules would have to reduce with min to agree.
    """
    if not ideal.is_squarefree:
        raise ValueError("ideal is not square-free")
    active = ideal.support_union()
    if len(active) > max_support:
        raise SizeGuardExceeded(
            f"{len(active)} active variables means 3^{len(active)} minors; "
            "raise the guard to proceed"
        )
    num_vars = ideal.num_vars
    for combo in itertools.product(_TAGS, repeat=len(active)):
        tags = [KEEP] * num_vars
        for var, tag in zip(active, combo):
            tags[var] = tag
        assignment = MinorAssignment(tuple(tags))
        if not predicate(minor(ideal, assignment)):
            return PackingResult(False, assignment)
    return PackingResult(True, None)


def has_packing_property(
    ideal: MonomialIdeal, max_support: int = DEFAULT_MAX_MINOR_SUPPORT
) -> PackingResult:
    """Every minor Koenig; on failure returns the first failing assignment."""
    return _every_minor(ideal, is_koenig, max_support)


def is_k_packed(
    ideal: MonomialIdeal, k: int, max_support: int = DEFAULT_MAX_MINOR_SUPPORT
) -> PackingResult:
    """Every minor k-Koenig; on failure returns the first failing assignment."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    return _every_minor(ideal, lambda J: is_k_koenig(J, k), max_support)
