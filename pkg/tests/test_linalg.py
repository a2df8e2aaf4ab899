from fractions import Fraction

import pytest

from homlie.linalg import Matrix, nullspace, rank, rref, solve


def test_construction_coerces_to_fractions():
    m = Matrix([[1, "1/2"], [0, 2]])
    assert m[0][1] == Fraction(1, 2)


def test_product_and_identity():
    a = Matrix([[1, 2], [3, 4]])
    assert a * Matrix.identity(2) == a
    assert Matrix.identity(2) * a == a
    assert a * Matrix([[0, 1], [1, 0]]) == Matrix([[2, 1], [4, 3]])


def test_powers():
    a = Matrix([[1, 1], [0, 1]])
    assert a**0 == Matrix.identity(2)
    assert a**5 == Matrix([[1, 5], [0, 1]])


def test_determinant_exact():
    assert Matrix([[2, 0], [0, "1/2"]]).det() == 1
    assert Matrix([[1, 2], [2, 4]]).det() == 0
    hilbert = Matrix([[Fraction(1, i + j + 1) for j in range(3)] for i in range(3)])
    assert hilbert.det() == Fraction(1, 2160)


def test_column_and_apply():
    m = Matrix([[1, 2], [3, 4]])
    assert m.column(1) == (2, 4)
    assert m.apply((1, 0)) == (1, 3)


def test_rref_pivots():
    reduced, pivots = rref([[0, 2, 4], [1, 1, 1]])
    assert pivots == [0, 1]
    assert reduced[0][0] == 1 and reduced[1][1] == 1
    assert reduced[0][1] == 0


def test_rank():
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[1, 0], [0, 1]]) == 2


def test_nullspace_reduced_echelon_convention():
    basis = nullspace([[1, 2, 3]])
    assert basis == [
        (Fraction(-2), Fraction(1), Fraction(0)),
        (Fraction(-3), Fraction(0), Fraction(1)),
    ]
    for vec in basis:
        assert sum(a * b for a, b in zip((1, 2, 3), vec)) == 0


def test_nullspace_of_empty_system():
    assert len(nullspace([], ncols=4)) == 4


def test_solve_consistent_and_inconsistent():
    m = Matrix([[1, 1], [0, 1]])
    assert solve(m, (3, 1)) == (2, 1)
    singular = Matrix([[1, 1], [1, 1]])
    assert solve(singular, (0, 1)) is None


def test_shape_errors():
    with pytest.raises(ValueError):
        Matrix([[1, 2], [3]])
    with pytest.raises(ValueError):
        Matrix([[1, 2]]) * Matrix([[1, 2]])
