from fractions import Fraction

from linemod.linalg import (
    SparseEchelon,
    coords_in_span,
    dense_nullspace,
    dense_rank,
    in_span,
    normalize_integer_vector,
)


def test_rank_and_membership():
    rows = [(1, 0, 2), (0, 1, 3)]
    assert dense_rank(rows) == 2
    assert dense_rank(rows + [(1, 1, 5)]) == 2
    assert in_span((2, -1, 1), rows)
    assert not in_span((0, 0, 1), rows)


def test_coords_in_span():
    rows = [(1, 0, 2), (0, 1, 3)]
    coeffs = coords_in_span((2, -1, 1), rows)
    assert coeffs == [Fraction(2), Fraction(-1)]
    assert coords_in_span((0, 0, 1), rows) is None


def test_echelon_deterministic_rank():
    ech = SparseEchelon()
    assert ech.add({0: Fraction(1), 1: Fraction(2)}) == 0
    assert ech.add({1: Fraction(1)}) == 1
    assert ech.add({0: Fraction(3), 1: Fraction(-1)}) is None
    assert ech.rank == 2
    assert ech.pivot_columns() == [0, 1]


def test_echelon_custom_column_order():
    # pivot on the largest-degree column first
    key = lambda c: -c
    ech = SparseEchelon(column_key=key)
    ech.add({0: Fraction(1), 5: Fraction(1)})
    assert ech.pivot_columns() == [5]


def test_nullspace():
    basis = dense_nullspace([(1, 0, 0, 0), (0, 0, 1, -1)], 4)
    assert len(basis) == 2
    for vec in basis:
        assert vec[0] == 0
        assert vec[2] == vec[3]


def test_normalize_integer_vector():
    assert normalize_integer_vector((Fraction(1, 2), Fraction(-1, 3), 0)) == (3, -2, 0)
    assert normalize_integer_vector((Fraction(-2), Fraction(4), 0)) == (1, -2, 0)
    assert normalize_integer_vector((0, 0)) == (0, 0)
