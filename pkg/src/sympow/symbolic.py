"""Symbolic and differential powers of square-free monomial ideals.

For a square-free monomial ideal I the n-th symbolic power is the
intersection of the n-th powers of its minimal primes.  A monomial x^a lies
in the power p^n of a monomial prime p = (x_i : i in C) exactly when the
total degree of a in the variables of C is at least n, so membership and
generators reduce to integer covering constraints.

Differential powers are implemented with characteristic-zero semantics: the
divided-power partial derivatives act on a monomial by subtracting from its
exponent vector, so x^a lies in the n-th differential power of I exactly
when x^(a-b) lies in I for every b <= a with |b| <= n-1.  They are kept as
an independent oracle for the symbolic side; prime-characteristic
differential powers are out of scope.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple

from .covers import DEFAULT_MAX_PRIMES, minimal_primes
from .errors import SizeGuardExceeded
from .monomials import (
    Monomial,
    MonomialIdeal,
    _contains_vec,
    _minimal_vectors,
    power_membership,
)

DEFAULT_MAX_SYMBOLIC_GENS = 200_000


def symbolic_membership(
    ideal: MonomialIdeal,
    monomial: Monomial,
    n: int,
    max_primes: int = DEFAULT_MAX_PRIMES,
) -> bool:
    """Decide m in I^(n): every minimal prime cover must see degree >= n."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    if len(monomial.exponents) != ideal.num_vars:
        raise ValueError("monomial does not match the ambient variable count")
    exps = monomial.exponents
    for cover in minimal_primes(ideal, max_primes):
        if sum(exps[i] for i in cover) < n:
            return False
    return True


def symbolic_power(
    ideal: MonomialIdeal,
    n: int,
    max_generators: int = DEFAULT_MAX_SYMBOLIC_GENS,
    max_primes: int = DEFAULT_MAX_PRIMES,
) -> MonomialIdeal:
    """Minimal generating set of I^(n), by enumerating minimal covering vectors.

    A generator is a divisibility-minimal exponent vector a with
    sum(a[i] for i in C) >= n for every minimal prime C.  In a minimal such
    vector no coordinate exceeds the requirement still open among the covers
    containing it (lowering a larger coordinate by one would keep every
    constraint satisfied), which bounds the search; in particular every
    coordinate is at most n.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    covers = minimal_primes(ideal, max_primes)
    num_vars = ideal.num_vars

    touching: list[list[int]] = [[] for _ in range(num_vars)]
    for idx, cover in enumerate(covers):
        for v in cover:
            touching[v].append(idx)
    last_var = [cover[-1] for cover in covers]

    residual = [n] * len(covers)
    vec = [0] * num_vars
    candidates: list[tuple[int, ...]] = []

    def descend(i: int) -> None:
        if i == num_vars:
            candidates.append(tuple(vec))
            if len(candidates) > max_generators:
                raise SizeGuardExceeded(
                    f"more than {max_generators} candidate generators for the "
                    "symbolic power; raise the guard to proceed"
                )
            return
        here = touching[i]
        # covers whose last variable is i must be satisfied now
        forced = 0
        cap = 0
        for c in here:
            r = residual[c]
            if r > cap:
                cap = r
            if last_var[c] == i and r > forced:
                forced = r
        for value in range(forced, cap + 1):
            vec[i] = value
            if value:
                for c in here:
                    residual[c] -= value
            descend(i + 1)
            if value:
                for c in here:
                    residual[c] += value
        vec[i] = 0

    descend(0)
    minimal = _minimal_vectors(candidates)
    gens = tuple(Monomial(v) for v in sorted(minimal, key=lambda v: (sum(v), v)))
    return MonomialIdeal(num_vars, gens)


def symbolic_power_via_primes(
    ideal: MonomialIdeal, n: int, max_primes: int = DEFAULT_MAX_PRIMES
) -> MonomialIdeal:
    """I^(n) as an explicit intersection of prime powers.

    Second route to the same ideal, kept for cross-checking the covering
    enumeration: build each p_C^n from its degree-n monomials in the cover
    variables and fold with intersect().  Quadratic blow-ups make this the
    slow path; use symbolic_power() for real work.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    covers = minimal_primes(ideal, max_primes)
    num_vars = ideal.num_vars
    result: MonomialIdeal | None = None
    for cover in covers:
        gens = [
            _scatter(num_vars, cover, comp) for comp in _compositions(n, len(cover))
        ]
        prime_power = MonomialIdeal.from_generators(num_vars, gens)
        result = prime_power if result is None else result.intersect(prime_power)
    assert result is not None
    return result


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head, *rest)


def _scatter(num_vars: int, positions: tuple[int, ...], values: tuple[int, ...]) -> tuple[int, ...]:
    vec = [0] * num_vars
    for pos, val in zip(positions, values):
        vec[pos] = val
    return tuple(vec)


def differential_membership(ideal: MonomialIdeal, monomial: Monomial, n: int) -> bool:
    """Decide m in the n-th differential power of I (characteristic zero).

    True when every divided-power derivative of order up to n-1 keeps the
    monomial inside I, i.e. x^(m-b) in I for all b <= m with |b| <= n-1.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    exps = monomial.exponents
    if len(exps) != ideal.num_vars:
        raise ValueError("monomial does not match the ambient variable count")
    budget = n - 1
    num_vars = ideal.num_vars
    shifted = list(exps)

    def check(i: int, remaining: int) -> bool:
        if i == num_vars:
            return _contains_vec(ideal, tuple(shifted))
        cap = min(remaining, exps[i])
        # subtract the largest amounts first: small residuals fail fastest
        for b in range(cap, -1, -1):
            shifted[i] = exps[i] - b
            if not check(i + 1, remaining - b):
                return False
        shifted[i] = exps[i]
        return True

    return check(0, budget)


class EqualityResult(NamedTuple):
    equal: bool
    witness: Monomial | None


def equals_ordinary(
    ideal: MonomialIdeal,
    n: int,
    max_generators: int = DEFAULT_MAX_SYMBOLIC_GENS,
    max_primes: int = DEFAULT_MAX_PRIMES,
) -> EqualityResult:
    """Test I^(n) = I^n; on failure also return a witness monomial.

    The ordinary power always sits inside the symbolic power, so equality
    holds exactly when every minimal generator of I^(n) lies in I^n.  The
    witness is the canonically least failing generator.
    """
    sym = symbolic_power(ideal, n, max_generators=max_generators, max_primes=max_primes)
    for gen in sym.generators:
        if not power_membership(ideal, gen, n):
            return EqualityResult(False, gen)
    return EqualityResult(True, None)


def containment(
    ideal: MonomialIdeal,
    a: int,
    b: int,
    max_generators: int = DEFAULT_MAX_SYMBOLIC_GENS,
    max_primes: int = DEFAULT_MAX_PRIMES,
) -> bool:
    """Decide I^(a) <= I^b, generator by generator."""
    if b < 1 or a < b:
        raise ValueError("need a >= b >= 1")
    sym = symbolic_power(ideal, a, max_generators=max_generators, max_primes=max_primes)
    return all(power_membership(ideal, gen, b) for gen in sym.generators)
