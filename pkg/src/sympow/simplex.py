"""Exact rational linear programming with a dense two-phase simplex.

Minimizes c.x subject to A x >= b and x >= 0, entirely in Fraction
arithmetic.  Bland's least-index rule picks both the entering and the
leaving variable, which rules out cycling, so no tolerances appear
anywhere.  Dimensions here are tiny (variables and constraints in the
dozens), so a dense tableau is the right tool.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Sequence


class LPSolution(NamedTuple):
    value: Fraction
    point: tuple[Fraction, ...]


class Infeasible(ValueError):
    pass


class Unbounded(ValueError):
    pass


def _pivot(tableau: list[list[Fraction]], basis: list[int], row: int, col: int) -> None:
    piv = tableau[row][col]
    tableau[row] = [entry / piv for entry in tableau[row]]
    for r, line in enumerate(tableau):
        if r != row and line[col]:
            factor = line[col]
            tableau[r] = [a - factor * b for a, b in zip(line, tableau[row])]
    basis[row] = col


def _run_simplex(
    tableau: list[list[Fraction]],
    basis: list[int],
    cost: list[Fraction],
    num_cols: int,
) -> Fraction:
    """Minimize over the tableau in place; returns the optimal objective."""
    # reduced-cost row for the current basis
    z = list(cost) + [Fraction(0)]
    for row, b in enumerate(basis):
        if z[b]:
            factor = z[b]
            z = [a - factor * c for a, c in zip(z, tableau[row])]
    while True:
        entering = -1
        for j in range(num_cols):
            if z[j] < 0:
                entering = j
                break
        if entering < 0:
            return -z[-1]
        leaving = -1
        best_ratio: Fraction | None = None
        for r, line in enumerate(tableau):
            if line[entering] > 0:
                ratio = line[-1] / line[entering]
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[r] < basis[leaving])
                ):
                    best_ratio = ratio
                    leaving = r
        if leaving < 0:
            raise Unbounded("objective is unbounded below")
        _pivot(tableau, basis, leaving, entering)
        factor = z[entering]
        z = [a - factor * c for a, c in zip(z, tableau[leaving])]


def solve_min(
    objective: Sequence[Fraction | int],
    rows: Sequence[Sequence[Fraction | int]],
    rhs: Sequence[Fraction | int],
) -> LPSolution:
    """Exact optimum and an optimal basic point for min c.x, A x >= b, x >= 0."""
    c = [Fraction(v) for v in objective]
    a = [[Fraction(v) for v in row] for row in rows]
    b = [Fraction(v) for v in rhs]
    n = len(c)
    m = len(a)
    if any(len(row) != n for row in a) or len(b) != m:
        raise ValueError("inconsistent LP dimensions")

    # columns: x (n) | surplus (m) | artificial (m) | rhs
    num_cols = n + 2 * m
    tableau: list[list[Fraction]] = []
    for i in range(m):
        sign = -1 if b[i] < 0 else 1
        row = [sign * v for v in a[i]]
        row += [Fraction(0)] * m
        row[n + i] = Fraction(-sign)
        row += [Fraction(0)] * m
        row[n + m + i] = Fraction(1)
        row.append(sign * b[i])
        tableau.append(row)
    basis = [n + m + i for i in range(m)]

    phase1 = [Fraction(0)] * (n + m) + [Fraction(1)] * m
    residue = _run_simplex(tableau, basis, phase1, num_cols)
    if residue != 0:
        raise Infeasible("constraints admit no nonnegative solution")

    # pivot lingering zero-valued artificials out of the basis; a row with
    # no real pivot column is redundant and can be dropped
    for row in range(m - 1, -1, -1):
        if basis[row] >= n + m:
            pivot_col = next(
                (j for j in range(n + m) if tableau[row][j] != 0), None
            )
            if pivot_col is None:
                del tableau[row]
                del basis[row]
            else:
                _pivot(tableau, basis, row, pivot_col)

    # forbid artificials from re-entering, then optimize the real objective
    for line in tableau:
        del line[n + m : n + 2 * m]
    phase2 = c + [Fraction(0)] * m
    value = _run_simplex(tableau, basis, phase2, n + m)

    point = [Fraction(0)] * n
    for row, var in enumerate(basis):
        if var < n:
            point[var] = tableau[row][-1]
    return LPSolution(value, tuple(point))
