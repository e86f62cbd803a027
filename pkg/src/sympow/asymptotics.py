"""Initial degrees, the Waldschmidt constant, and resurgence bounds.

alpha(I) is the least degree of a generator.  The Waldschmidt constant is
the limit of alpha(I^(m))/m; by subadditivity of m -> alpha(I^(m)) (Fekete)
the limit exists and equals the infimum.  For a square-free monomial ideal
it is also the optimum of the covering linear program

    min sum(x)  subject to  sum(x[i] for i in C) >= 1 for every minimal
    prime C,  x >= 0,

solved here in exact rational arithmetic.  The library treats the LP/limit
agreement as a validated contract: the test suite cross-checks the optimum
against the sequence.

Resurgence is never computed outright (no general algorithm exists); only
certified bounds are reported: alpha/waldschmidt from below, the ambient
dimension from above, and the largest witnessed failure ratio n/m with
I^(n) not inside I^m, which is again only a lower bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .covers import DEFAULT_MAX_PRIMES, minimal_primes
from .errors import SizeGuardExceeded
from .monomials import MonomialIdeal
from .simplex import LPSolution, solve_min
from .symbolic import DEFAULT_MAX_SYMBOLIC_GENS, containment, symbolic_power

DEFAULT_MAX_LP_ROWS = 2000


def alpha(ideal: MonomialIdeal) -> int:
    """Least total degree among the minimal generators."""
    if ideal.is_zero:
        raise ValueError("alpha is undefined for the zero ideal")
    # generators are sorted by degree first
    return ideal.generators[0].degree


def waldschmidt_sequence(
    ideal: MonomialIdeal,
    up_to: int,
    max_generators: int = DEFAULT_MAX_SYMBOLIC_GENS,
) -> list[Fraction]:
    """The exact quotients alpha(I^(m))/m for m = 1..up_to."""
    if up_to < 1:
        raise ValueError("up_to must be a positive integer")
    return [
        Fraction(alpha(symbolic_power(ideal, m, max_generators=max_generators)), m)
        for m in range(1, up_to + 1)
    ]


def waldschmidt_lp(
    ideal: MonomialIdeal,
    max_primes: int = DEFAULT_MAX_PRIMES,
    max_rows: int = DEFAULT_MAX_LP_ROWS,
) -> LPSolution:
    """Optimum and optimal point of the covering LP over the symbolic polyhedron."""
    covers = minimal_primes(ideal, max_primes)
    if len(covers) > max_rows:
        raise SizeGuardExceeded(
            f"{len(covers)} minimal primes exceed the LP row guard {max_rows}"
        )
    n = ideal.num_vars
    rows = []
    for cover in covers:
        row = [0] * n
        for v in cover:
            row[v] = 1
        rows.append(row)
    return solve_min([1] * n, rows, [1] * len(rows))


def waldschmidt_exact(
    ideal: MonomialIdeal,
    max_primes: int = DEFAULT_MAX_PRIMES,
    max_rows: int = DEFAULT_MAX_LP_ROWS,
) -> Fraction:
    """The Waldschmidt constant as an exact rational."""
    return waldschmidt_lp(ideal, max_primes=max_primes, max_rows=max_rows).value


@dataclass(frozen=True)
class ResurgenceBounds:
    """Certified two-sided information about the resurgence."""

    alpha: int
    waldschmidt: Fraction
    rho_lower: Fraction
    rho_upper: int
    failures: tuple[tuple[int, int], ...] = field(default_factory=tuple)


def resurgence_report(
    ideal: MonomialIdeal,
    up_to: int,
    max_generators: int = DEFAULT_MAX_SYMBOLIC_GENS,
) -> ResurgenceBounds:
    """Bounds on the resurgence from a bounded containment sweep.

    Scans all 1 <= m <= n <= up_to, records the pairs with I^(n) not inside
    I^m, and combines alpha/waldschmidt with the largest witnessed ratio
    into a certified lower bound.  The ambient variable count is the upper
    bound.  The true resurgence is the supremum over all pairs, so the
    sweep result is a lower bound only, never the value itself.
    """
    if up_to < 1:
        raise ValueError("up_to must be a positive integer")
    a = alpha(ideal)
    wald = waldschmidt_exact(ideal)
    failures = []
    for n in range(1, up_to + 1):
        for m in range(1, n + 1):
            if not containment(ideal, n, m, max_generators=max_generators):
                failures.append((n, m))
    rho_lower = Fraction(a) / wald
    for n, m in failures:
        ratio = Fraction(n, m)
        if ratio > rho_lower:
            rho_lower = ratio
    return ResurgenceBounds(
        alpha=a,
        waldschmidt=wald,
        rho_lower=rho_lower,
        rho_upper=ideal.num_vars,
        failures=tuple(failures),
    )
