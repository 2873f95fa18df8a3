from fractions import Fraction

import pytest

from helpers import poly
from montap.laurent import VarContext
from montap.matrix import (
    SquareMatrix,
    adjugate,
    bareiss_determinant,
    bracket,
    determinant,
    determinant_leibniz,
    g_matrix,
    matrix_inverse,
    u_matrix,
)
from montap.rings import IntegerRing, PrimeField, RationalField

Z = IntegerRing()
CTX = VarContext(1, 0)


def mat(rows, ring=Z, n=1):
    return SquareMatrix(VarContext(n, 0), ring, [[poly(x, n, ring) for x in r] for r in rows])


def test_identity_and_products():
    a = mat([["t", "1"], ["0", "t"]])
    one = SquareMatrix.identity(CTX, Z, 2)
    assert (a * one) == a
    assert (a ** 2)[0, 1] == poly("2*t")
    assert one.is_identity() and not a.is_identity()


def test_determinants_agree():
    a = mat([["t", "1", "2", "0"], ["t**-1", "3", "t", "1"], ["0", "t**2", "1", "-1"], ["1", "1", "1", "t"]])
    assert determinant(a) == determinant_leibniz(a)
    assert bareiss_determinant(a.rows, CTX, Z) == determinant_leibniz(a)


def test_bareiss_large():
    rows = [[poly(f"t**{(i * j) % 3} + {i - j}") for j in range(6)] for i in range(6)]
    a = SquareMatrix(CTX, Z, rows)
    assert bareiss_determinant(rows, CTX, Z) == determinant_leibniz(a)


def test_adjugate_identity():
    a = mat([["t", "1", "0"], ["2", "t", "1"], ["0", "1", "t"]])
    d = determinant(a)
    assert (a * adjugate(a)) == SquareMatrix.scalar(CTX, Z, 3, d)


def test_inverse_of_unimodular():
    a = mat([["t", "1"], ["t - 1", "1"]])
    inv = matrix_inverse(a)
    assert (a * inv).is_identity()
    assert inv.is_polynomial()


def test_inverse_produces_fractions():
    a = mat([["t", "1"], ["1", "t"]])
    inv = matrix_inverse(a)
    assert not inv.is_polynomial()
    assert (inv * a).is_identity()


def test_bracket_values():
    a = mat([["t"]])
    assert bracket(3, a)[0, 0] == poly("1 + t + t**2")
    assert bracket(0, a).is_zero()
    assert bracket(-2, a)[0, 0] == poly("-t**-1 - t**-2")


def test_bracket_scalar_rational():
    Q = RationalField()
    a = SquareMatrix.scalar(CTX, Q, 1, 2)
    assert str(bracket(-2, a)[0, 0]) == "-3/4"


@pytest.mark.parametrize("k, expected", [
    (-3, "1 - t**-1 + t**-2"), (-2, "1 - t**-1"), (-1, "1"), (0, "0"),
    (1, "t"), (2, "t - t**2"), (3, "t - t**2 + t**3"), (4, "t - t**2 + t**3 - t**4"),
])
def test_u_with_equal_entries(k, expected):
    a = mat([["t"]])
    assert u_matrix(k, a, a)[0, 0] == poly(expected)


def test_u_doctest_value():
    Q = RationalField()
    a = SquareMatrix.scalar(CTX, Q, 1, 3)
    b = SquareMatrix.scalar(CTX, Q, 1, Fraction(1, 2))
    assert str(u_matrix(3, a, b)[0, 0]) == "6"


def test_g_rows_sum_to_identity():
    F = PrimeField(5)
    a = mat([["t", "1"], ["0", "2"]], F)
    b = mat([["1", "0"], ["3", "t"]], F)
    for k in (-2, 1, 3):
        G = g_matrix(k, a, b)
        for row in G:
            assert (row[0] + row[1]).is_identity()
