from fractions import Fraction

import pytest

from exactplane import InconsistentError, SingularSystemError, solve_unique


def test_unique_2x2():
    x = solve_unique([[2, 1], [1, -1]], [5, 1])
    assert x == [Fraction(2), Fraction(1)]


def test_overdetermined_consistent():
    # three equations, two unknowns, all agreeing on (1, 2)
    rows = [[1, 0], [0, 1], [1, 1]]
    assert solve_unique(rows, [1, 2, 3]) == [Fraction(1), Fraction(2)]


def test_overdetermined_inconsistent():
    with pytest.raises(InconsistentError):
        solve_unique([[1, 0], [0, 1], [1, 1]], [1, 2, 4])


def test_underdetermined():
    with pytest.raises(SingularSystemError):
        solve_unique([[1, 1], [2, 2]], [3, 6])


def test_singular_square_but_inconsistent():
    with pytest.raises(InconsistentError):
        solve_unique([[1, 1], [2, 2]], [3, 7])


def test_shape_validation():
    with pytest.raises(ValueError):
        solve_unique([[1, 2], [1]], [1, 2])
    with pytest.raises(ValueError):
        solve_unique([[1, 2]], [1, 2])
    with pytest.raises(ValueError):
        solve_unique([], [])


def test_exact_rationals_no_drift():
    rows = [[Fraction(1, 3), Fraction(1, 7)], [Fraction(2, 5), Fraction(-1, 11)]]
    rhs = [Fraction(10, 21), Fraction(17, 55)]
    x = solve_unique(rows, rhs)
    assert rows[0][0] * x[0] + rows[0][1] * x[1] == rhs[0]
    assert rows[1][0] * x[0] + rows[1][1] * x[1] == rhs[1]
