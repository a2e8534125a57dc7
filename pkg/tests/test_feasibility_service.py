from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from services.feasibility_service import (
    RationalTableau, common_denominator, convex_combination_below, find_nonnegative_solution,
)


def test_feasible_system_has_exact_solution():
    A = [[1, 1, 0], [0, 1, 1]]
    b = [1, Fraction(1, 2)]
    x = find_nonnegative_solution(A, b)
    assert x is not None
    assert all(v >= 0 for v in x)
    assert [sum(a * v for a, v in zip(row, x)) for row in A] == b


def test_infeasible_system():
    # x + y = 1 and x + y = 2 cannot both hold
    assert find_nonnegative_solution([[1, 1], [1, 1]], [1, 2]) is None
    # x = -1 with x >= 0
    assert find_nonnegative_solution([[1]], [-1]) is None


def test_negative_right_hand_side_rows_are_flipped():
    x = find_nonnegative_solution([[-1, 1]], [-2])
    assert x is not None
    assert -x[0] + x[1] == -2


def test_degenerate_problem_terminates():
    A = [[1, -1, 0, 0], [1, 0, -1, 0], [1, 0, 0, -1], [0, 1, 1, 1]]
    tableau = RationalTableau(A, [0, 0, 0, 0])
    assert tableau.solve() is not None


def test_ragged_matrix_is_rejected():
    with pytest.raises(ValueError):
        find_nonnegative_solution([[1, 0], [1]], [0, 0])


def test_convex_combination_below():
    lam = convex_combination_below([(2, 0), (0, 2)], (1, 1))
    assert lam == [Fraction(1, 2), Fraction(1, 2)]
    assert convex_combination_below([(2, 0), (0, 2)], (1, 0)) is None
    assert convex_combination_below([], (1, 1)) is None
    scaled = convex_combination_below([(2, 0), (0, 2)], (2, 2), total=2)
    assert sum(scaled) == 2


def test_common_denominator():
    assert common_denominator([Fraction(1, 2), Fraction(1, 3), Fraction(2)]) == 6
    assert common_denominator([]) == 1


@given(
    st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5)), min_size=1, max_size=4),
    st.tuples(st.integers(0, 8), st.integers(0, 8)),
)
def test_returned_weights_satisfy_constraints(points, target):
    lam = convex_combination_below(points, target)
    if lam is None:
        return
    assert all(v >= 0 for v in lam)
    assert sum(lam) == 1
    for j in range(2):
        assert sum(l * p[j] for l, p in zip(lam, points)) <= target[j]


@given(st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5)), min_size=1, max_size=4))
def test_any_generator_lies_below_itself(points):
    for p in points:
        assert convex_combination_below(points, p) is not None
