from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import linprog

from sympow.simplex import Infeasible, LPSolution, Unbounded, solve_min


def check_feasible(solution: LPSolution, rows, rhs, objective):
    for row, b in zip(rows, rhs):
        assert sum(Fraction(a) * x for a, x in zip(row, solution.point)) >= b
    assert all(x >= 0 for x in solution.point)
    assert sum(Fraction(c) * x for c, x in zip(objective, solution.point)) == solution.value


class TestHandCases:
    def test_single_variable(self):
        sol = solve_min([1], [[1]], [3])
        assert sol.value == 3
        assert sol.point == (Fraction(3),)

    def test_triangle_covering(self):
        rows = [[1, 1, 0], [1, 0, 1], [0, 1, 1]]
        sol = solve_min([1, 1, 1], rows, [1, 1, 1])
        assert sol.value == Fraction(3, 2)
        check_feasible(sol, rows, [1, 1, 1], [1, 1, 1])

    def test_two_singleton_constraints(self):
        sol = solve_min([1, 1], [[1, 0], [0, 1]], [1, 1])
        assert sol.value == 2

    def test_redundant_rows(self):
        rows = [[1, 0], [1, 0], [2, 0]]
        sol = solve_min([1, 0], rows, [1, 1, 2])
        assert sol.value == 1

    def test_weighted_objective(self):
        # pushing weight onto the cheap variable
        sol = solve_min([3, 1], [[1, 1]], [2])
        assert sol.value == 2
        assert sol.point == (Fraction(0), Fraction(2))

    def test_negative_rhs_is_slack(self):
        sol = solve_min([1, 1], [[1, 1], [-1, -1]], [1, -5])
        assert sol.value == 1

    def test_infeasible(self):
        with pytest.raises(Infeasible):
            solve_min([1], [[-1]], [1])

    def test_unbounded(self):
        with pytest.raises(Unbounded):
            solve_min([-1], [[1]], [0])

    def test_exactness_with_awkward_fractions(self):
        rows = [[Fraction(1, 3), Fraction(1, 7)], [Fraction(2, 5), Fraction(3, 11)]]
        sol = solve_min([1, 1], rows, [1, 1])
        check_feasible(sol, rows, [1, 1], [1, 1])


small_entries = st.integers(0, 4)


@given(
    st.lists(st.tuples(small_entries, small_entries, small_entries), min_size=1, max_size=5),
    st.tuples(st.integers(1, 4), st.integers(1, 4), st.integers(1, 4)),
)
@settings(max_examples=60)
def test_matches_floating_point_solver(rows, objective):
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return
    rhs = [1] * len(rows)
    sol = solve_min(list(objective), rows, rhs)
    check_feasible(sol, rows, rhs, objective)
    reference = linprog(
        c=list(objective),
        A_ub=[[-a for a in row] for row in rows],
        b_ub=[-b for b in rhs],
        bounds=[(0, None)] * 3,
        method="highs",
    )
    assert reference.status == 0
    assert abs(float(sol.value) - reference.fun) < 1e-9
