"""Simplicial complexes, the Stanley-Reisner dictionary, and matroid checks.

A simplicial complex is stored by its facet antichain.  Its Stanley-Reisner
ideal is generated by the minimal non-faces; conversely the complex of a
square-free ideal has as facets the complements of the minimal primes.  The
matroid predicate is the facet exchange property: any element of one facet
can be swapped for some element of another facet, staying a facet.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

from .covers import minimal_primes
from .monomials import MonomialIdeal


@dataclass(frozen=True)
class SimplicialComplex:
    """A facet list on vertices 0..n-1, stored as a canonically ordered antichain."""

    num_vertices: int
    facets: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.num_vertices <= 0:
            raise ValueError("num_vertices must be positive")
        facets = tuple(tuple(sorted(set(f))) for f in self.facets)
        for f in facets:
            if f and (f[0] < 0 or f[-1] >= self.num_vertices):
                raise ValueError(f"facet {f} out of range")
        sets = [set(f) for f in facets]
        for i, a in enumerate(sets):
            for j, b in enumerate(sets):
                if i != j and a <= b:
                    raise ValueError("facets must form an antichain")
        object.__setattr__(self, "facets", tuple(sorted(facets)))

    @classmethod
    def from_faces(cls, num_vertices: int, faces: Iterable[Sequence[int]]) -> SimplicialComplex:
        """Build from any face list by dropping faces contained in others."""
        sets = {frozenset(f) for f in faces}
        maximal = [f for f in sets if not any(f < g for g in sets)]
        return cls(num_vertices, tuple(tuple(sorted(f)) for f in maximal))

    def is_face(self, subset: Iterable[int]) -> bool:
        s = set(subset)
        return any(s <= set(f) for f in self.facets)


def stanley_reisner_ideal(complex_: SimplicialComplex) -> MonomialIdeal:
    """The ideal of minimal non-faces.

    Subsets are scanned in increasing cardinality; any candidate containing
    an already-found non-face is skipped, so exactly the minimal non-faces
    survive.  The empty complex (no facets) maps to the unit ideal, the full
    simplex to the zero ideal.
    """
    n = complex_.num_vertices
    facet_sets = [frozenset(f) for f in complex_.facets]
    found: list[frozenset[int]] = []
    for size in range(n + 1):
        for combo in itertools.combinations(range(n), size):
            cand = frozenset(combo)
            if any(nf <= cand for nf in found):
                continue
            if not any(cand <= f for f in facet_sets):
                found.append(cand)
    gens = []
    for nf in found:
        vec = [0] * n
        for v in nf:
            vec[v] = 1
        gens.append(tuple(vec))
    return MonomialIdeal.from_generators(n, gens)


def stanley_reisner_complex(ideal: MonomialIdeal) -> SimplicialComplex:
    """The complex of a square-free proper ideal.

    Faces are the subsets supporting no generator; the facets are exactly
    the complements of the minimal primes.
    """
    if not ideal.is_squarefree:
        raise ValueError("ideal is not square-free")
    if ideal.is_unit:
        raise ValueError("the unit ideal has an empty complex with no facets")
    n = ideal.num_vars
    if ideal.is_zero:
        return SimplicialComplex(n, (tuple(range(n)),))
    everything = set(range(n))
    facets = tuple(
        tuple(sorted(everything - set(cover))) for cover in minimal_primes(ideal)
    )
    return SimplicialComplex(n, facets)


class MatroidResult(NamedTuple):
    is_matroid: bool
    counterexample: tuple[tuple[int, ...], tuple[int, ...], int] | None


def is_matroid(complex_: SimplicialComplex) -> MatroidResult:
    """Facet exchange check, exactly as defined.

    For every ordered facet pair (F, G) and every i in F there must be some
    j in G with (F minus i) plus j again a facet.  The first failure in
    canonical order (facets sorted, i ascending) is reported.
    """
    facets = [set(f) for f in complex_.facets]
    facet_lookup = {frozenset(f) for f in complex_.facets}
    for f_idx, F in enumerate(facets):
        for g_idx, G in enumerate(facets):
            for i in sorted(F):
                base = F - {i}
                if not any(frozenset(base | {j}) in facet_lookup for j in sorted(G)):
                    return MatroidResult(
                        False,
                        (complex_.facets[f_idx], complex_.facets[g_idx], i),
                    )
    return MatroidResult(True, None)


# The 28 exponent triples (1-based) of the cubic ideal attached to the Fano
# plane on seven points: all triples of points that are not collinear in the
# standard drawing (triangle 1-3-5 with midpoints 2, 4, 6, center 7, and the
# incircle 2-4-6 counted as a line).
_FANO_NONCOLLINEAR_TRIPLES: tuple[tuple[int, int, int], ...] = (
    (1, 2, 4), (1, 3, 4), (2, 3, 4), (1, 2, 5), (1, 3, 5), (2, 3, 5),
    (1, 4, 5), (2, 4, 5), (1, 2, 6), (1, 3, 6), (2, 3, 6), (1, 4, 6),
    (3, 4, 6), (2, 5, 6), (3, 5, 6), (4, 5, 6), (1, 2, 7), (1, 3, 7),
    (2, 3, 7), (2, 4, 7), (3, 4, 7), (1, 5, 7), (3, 5, 7), (4, 5, 7),
    (1, 6, 7), (2, 6, 7), (4, 6, 7), (5, 6, 7),
)


@lru_cache(maxsize=1)
def fano_ideal() -> MonomialIdeal:
    """The 28-generator cubic ideal of the Fano configuration on 7 vertices.

    Generators are the squarefree cubics over the non-collinear point
    triples; the seven collinear triples are exactly the missing ones.  This
    fixture is the single source of truth: complexes below are derived from
    it, not hand-entered.
    """
    gens = []
    for triple in _FANO_NONCOLLINEAR_TRIPLES:
        vec = [0] * 7
        for v in triple:
            vec[v - 1] = 1
        gens.append(tuple(vec))
    return MonomialIdeal.from_generators(7, gens)


@lru_cache(maxsize=1)
def fano_complex() -> SimplicialComplex:
    """The Stanley-Reisner complex of fano_ideal(): facets are the 7 lines."""
    return stanley_reisner_complex(fano_ideal())


@lru_cache(maxsize=1)
def fano_matroid() -> SimplicialComplex:
    """The rank-3 matroid of the Fano plane: facets are the 28 bases.

    These facets are the supports of the generators of fano_ideal().  Note
    the asymmetry of the dictionary here: the matroid's own Stanley-Reisner
    ideal is generated by its circuits (the 7 lines plus 7 quartics), not by
    the 28 basis cubics.
    """
    facets = tuple(tuple(v - 1 for v in t) for t in _FANO_NONCOLLINEAR_TRIPLES)
    return SimplicialComplex(7, facets)
