from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qschur_hh.linalg import GF, QQ, EchelonBasis, Field, Matrix, kernel_basis, matmul, rank, solve

FIELDS = [QQ, GF(2), GF(3), GF(5)]


def small_matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)))


def test_field_descriptors():
    assert Field.from_descriptor("rational") is QQ
    assert Field.from_descriptor("prime(5)") == GF(5)
    assert Field.from_descriptor("GF(7)").characteristic == 7
    with pytest.raises(ValueError):
        Field.from_descriptor("prime(4)")
    with pytest.raises(ValueError):
        Field.from_descriptor("reals")


def test_prime_field_arithmetic():
    F = GF(5)
    assert F(7) == 2
    assert F.inv(2) == 3
    assert F(Fraction(1, 2)) == 3
    with pytest.raises(ZeroDivisionError):
        F.inv(0)


def test_encode_round_trip():
    assert QQ.decode(QQ.encode(Fraction(-3, 4))) == Fraction(-3, 4)
    assert GF(3).decode(GF(3).encode(2)) == 2


def test_rank_and_kernel_small():
    m = Matrix.from_rows([[1, 2], [2, 4]])
    assert rank(m) == 1
    assert kernel_basis(m) == [[-2, 1]]
    assert rank(Matrix.from_rows([[1, 1], [1, 1]], GF(2))) == 1
    # rank depends on the characteristic
    m2 = Matrix.from_rows([[1, 1], [1, -1]], QQ)
    assert rank(m2) == 2
    assert rank(Matrix.from_rows([[1, 1], [1, -1]], GF(2))) == 1


def test_matrix_rejects_bad_entries():
    with pytest.raises(IndexError):
        Matrix(1, 1, QQ, {(1, 0): Fraction(1)})
    with pytest.raises(ValueError):
        Matrix(1, 1, QQ, {(0, 0): Fraction(0)})


def test_solve_inconsistent():
    m = Matrix.from_rows([[1, 1], [1, 1]])
    assert solve(m, [1, 2]) is None
    x = solve(m, [2, 2])
    assert m.apply(x) == [2, 2]


def test_echelon_basis_coordinates():
    ech = EchelonBasis(QQ, [{0: 1, 1: 1}, {1: 1}])
    assert ech.rank == 2
    assert ech.contains({0: 3})
    assert ech.coordinates({0: 2, 1: 5}) == {0: 2, 1: 5}
    assert not ech.add({0: 1})
    assert EchelonBasis(QQ).coordinates({2: 1}) is None


@settings(max_examples=60, deadline=None)
@given(small_matrices(), st.sampled_from(FIELDS))
def test_rank_nullity(rows, F):
    m = Matrix.from_rows(rows, F)
    ker = kernel_basis(m)
    assert rank(m) + len(ker) == m.cols
    for v in ker:
        assert all(x == 0 for x in m.apply(v))


@settings(max_examples=60, deadline=None)
@given(small_matrices(), st.sampled_from(FIELDS), st.randoms(use_true_random=False))
def test_rank_invariant_under_row_permutation(rows, F, rnd):
    m = Matrix.from_rows(rows, F)
    perm = list(range(m.rows))
    rnd.shuffle(perm)
    assert rank(m.permute_rows(perm)) == rank(m)
    assert rank(m.transpose()) == rank(m)


@settings(max_examples=60, deadline=None)
@given(small_matrices(), st.sampled_from(FIELDS), st.data())
def test_solve_substitution(rows, F, data):
    m = Matrix.from_rows(rows, F)
    x0 = data.draw(st.lists(st.integers(-3, 3), min_size=m.cols, max_size=m.cols))
    b = m.apply([F(v) for v in x0])
    for order in (None, list(range(m.cols))[::-1]):
        x = solve(m, b, col_order=order)
        assert x is not None
        assert m.apply(x) == b


def test_matmul_identity():
    a = Matrix.from_rows([[1, 2], [3, 4]])
    i = Matrix.from_rows([[1, 0], [0, 1]])
    assert matmul(a, i) == a
    assert matmul(a, a).to_dense() == [[7, 10], [15, 22]]
