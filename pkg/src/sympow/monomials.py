"""Exact arithmetic on monomials and monomial ideals.

A monomial is an exponent vector over a fixed ordered variable set; a
monomial ideal is stored by its unique minimal generating set (no generator
divides another), sorted in graded lexicographic order so that equal ideals
have bit-identical representations.  The zero ideal has no generators; the
unit ideal has the single generator 1 (the all-zero vector).  That
convention keeps products and powers total.

All operations are pure functions of immutable values and safe to call
concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, total_ordering
from typing import Iterable, Iterator, Sequence


@total_ordering
@dataclass(frozen=True)
class Monomial:
    """An exponent vector a, standing for the monomial x^a."""

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        exps = tuple(int(e) for e in self.exponents)
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        object.__setattr__(self, "exponents", exps)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.exponents) if e > 0)

    @property
    def is_one(self) -> bool:
        return not any(self.exponents)

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def divides(self, other: Monomial) -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: Monomial) -> Monomial:
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """Graded lexicographic key: total degree first, then the vector."""
        return (self.degree, self.exponents)

    def __lt__(self, other: Monomial) -> bool:
        return self.sort_key() < other.sort_key()


def _minimal_vectors(vectors: Iterable[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Divisibility-minimal elements of a set of exponent vectors.

    Distinct vectors of equal degree never divide one another, so each
    candidate is compared only against already-kept vectors of strictly
    smaller degree.
    """
    ordered = sorted(set(vectors), key=lambda v: (sum(v), v))
    kept: list[tuple[int, ...]] = []
    # kept[:boundary] holds the vectors of degree < current candidate degree
    boundary = 0
    last_degree = -1
    for vec in ordered:
        deg = sum(vec)
        if deg != last_degree:
            boundary = len(kept)
            last_degree = deg
        dominated = False
        for small in kept[:boundary]:
            for a, b in zip(small, vec):
                if a > b:
                    break
            else:
                dominated = True
                break
        if not dominated:
            kept.append(vec)
    return kept


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal in its canonical minimal-generator representation."""

    num_vars: int
    generators: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        if self.num_vars <= 0:
            raise ValueError("num_vars must be positive")
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        keys = []
        for g in gens:
            if len(g.exponents) != self.num_vars:
                raise ValueError(
                    f"generator {g.exponents} does not match num_vars={self.num_vars}"
                )
            keys.append(g.sort_key())
        if any(keys[i] >= keys[i + 1] for i in range(len(keys) - 1)):
            raise ValueError("generators must be strictly increasing in graded lex order")

    def __hash__(self) -> int:
        cached = self.__dict__.get("_hash")
        if cached is None:
            cached = hash((self.num_vars, self.generators))
            object.__setattr__(self, "_hash", cached)
        return cached

    @classmethod
    def from_generators(
        cls, num_vars: int, generators: Iterable[Monomial | Sequence[int]]
    ) -> MonomialIdeal:
        """Build the ideal generated by arbitrary monomials, minimalized."""
        vectors = []
        for g in generators:
            exps = g.exponents if isinstance(g, Monomial) else tuple(int(e) for e in g)
            if len(exps) != num_vars:
                raise ValueError(f"generator {exps} does not match num_vars={num_vars}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            vectors.append(exps)
        minimal = _minimal_vectors(vectors)
        gens = tuple(Monomial(v) for v in sorted(minimal, key=lambda v: (sum(v), v)))
        return cls(num_vars, gens)

    @classmethod
    def zero(cls, num_vars: int) -> MonomialIdeal:
        return cls(num_vars, ())

    @classmethod
    def unit(cls, num_vars: int) -> MonomialIdeal:
        return cls(num_vars, (Monomial((0,) * num_vars),))

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_one

    @property
    def is_proper(self) -> bool:
        return not self.is_unit

    @property
    def is_squarefree(self) -> bool:
        return all(g.is_squarefree for g in self.generators)

    def support_union(self) -> tuple[int, ...]:
        """Indices of variables appearing in at least one generator."""
        seen: set[int] = set()
        for g in self.generators:
            seen.update(g.support)
        return tuple(sorted(seen))

    def contains(self, monomial: Monomial) -> bool:
        """Membership test: some generator divides the monomial."""
        if len(monomial.exponents) != self.num_vars:
            raise ValueError("monomial does not match the ambient variable count")
        return _contains_vec(self, monomial.exponents)

    def __contains__(self, monomial: Monomial) -> bool:
        return self.contains(monomial)

    def product(self, other: MonomialIdeal) -> MonomialIdeal:
        _check_same_ring(self, other)
        pairs = (
            tuple(a + b for a, b in zip(g.exponents, h.exponents))
            for g in self.generators
            for h in other.generators
        )
        return MonomialIdeal.from_generators(self.num_vars, pairs)

    __mul__ = product

    def power(self, n: int) -> MonomialIdeal:
        if n < 0:
            raise ValueError("exponent must be nonnegative")
        result = MonomialIdeal.unit(self.num_vars)
        for _ in range(n):
            result = result.product(self)
        return result

    __pow__ = power

    def intersect(self, other: MonomialIdeal) -> MonomialIdeal:
        """Intersection, via pairwise lcms of generators (quadratic hot spot)."""
        _check_same_ring(self, other)
        pairs = (
            tuple(max(a, b) for a, b in zip(g.exponents, h.exponents))
            for g in self.generators
            for h in other.generators
        )
        return MonomialIdeal.from_generators(self.num_vars, pairs)

    def quotient(self, monomial: Monomial) -> MonomialIdeal:
        """The colon ideal (I : m), one generator per generator of I."""
        if len(monomial.exponents) != self.num_vars:
            raise ValueError("monomial does not match the ambient variable count")
        shifted = (
            tuple(max(a - b, 0) for a, b in zip(g.exponents, monomial.exponents))
            for g in self.generators
        )
        return MonomialIdeal.from_generators(self.num_vars, shifted)

    def radical(self) -> MonomialIdeal:
        """The radical: generated by the supports of the generators."""
        supports = (
            tuple(1 if e > 0 else 0 for e in g.exponents) for g in self.generators
        )
        return MonomialIdeal.from_generators(self.num_vars, supports)


def _check_same_ring(a: MonomialIdeal, b: MonomialIdeal) -> None:
    if a.num_vars != b.num_vars:
        raise ValueError(f"variable counts differ: {a.num_vars} vs {b.num_vars}")


def minimalize(num_vars: int, monomials: Iterable[Monomial | Sequence[int]]) -> MonomialIdeal:
    """Minimal generating set of the ideal generated by the given monomials."""
    return MonomialIdeal.from_generators(num_vars, monomials)


@lru_cache(maxsize=1 << 18)
def _contains_vec(ideal: MonomialIdeal, exps: tuple[int, ...]) -> bool:
    deg = sum(exps)
    for g in ideal.generators:
        ge = g.exponents
        if g.degree > deg:
            # generators are sorted by degree; nothing later can divide
            return False
        for a, b in zip(ge, exps):
            if a > b:
                break
        else:
            return True
    return False


@lru_cache(maxsize=1 << 20)
def _product_divides(ideal: MonomialIdeal, residual: tuple[int, ...], budget: int) -> bool:
    if budget == 0:
        return True
    # a product of `budget` generators has degree >= budget * min degree
    if sum(residual) < budget * ideal.generators[0].degree:
        return False
    for g in ideal.generators:
        ge = g.exponents
        for a, b in zip(ge, residual):
            if a > b:
                break
        else:
            rest = tuple(b - a for a, b in zip(ge, residual))
            if _product_divides(ideal, rest, budget - 1):
                return True
    return False


def power_membership(ideal: MonomialIdeal, monomial: Monomial, n: int) -> bool:
    """Decide m in I^n without materializing I^n.

    Searches for generators g_1, ..., g_n (repetition allowed) whose product
    divides m, by depth-first search on the residual exponent vector with
    memoization; generators are tried in canonical order.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    if ideal.is_zero:
        raise ValueError("power membership is undefined for the zero ideal")
    if len(monomial.exponents) != ideal.num_vars:
        raise ValueError("monomial does not match the ambient variable count")
    return _product_divides(ideal, monomial.exponents, n)


def iter_box(bounds: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All exponent vectors v with 0 <= v[i] <= bounds[i], in lex order."""
    if not bounds:
        yield ()
        return
    head, *tail = bounds
    for e in range(head + 1):
        for rest in iter_box(tail):
            yield (e, *rest)
