from itertools import combinations, product

import pytest
from hypothesis import given, settings, strategies as st

from oracle import NaiveField, leibniz_det, naive_superregular
from srkit.errors import IndexOutOfRange, NotSquare, SizeMismatch
from srkit.field import GF
from srkit.toeplitz import (
    LtToeplitz, ProperIndexPair, antidiagonal_pair, antidiagonal_transpose, check_superregular, det,
    enumerate_proper, essential_pairs, is_proper, is_superregular, is_superregular_incremental,
    new_entry_pairs, submatrix, superregularity_certificate,
)
from math import comb


def _naive_proper(n):
    out = []
    for s in range(1, n + 1):
        for I in combinations(range(1, n + 1), s):
            for J in combinations(range(1, n + 1), s):
                if all(j <= i for i, j in zip(I, J)):
                    out.append((I, J))
    return out


def test_entry_and_dense():
    F = GF(5)
    A = LtToeplitz(F, [1, 2, 3])
    assert A.dense() == [[1, 0, 0], [2, 1, 0], [3, 2, 1]]
    assert A.entry(3, 1) == F(3)
    assert A.entry(1, 3) == F(0)
    with pytest.raises(IndexOutOfRange):
        A.entry(4, 1)
    with pytest.raises(ValueError):
        LtToeplitz(F, [])
    with pytest.raises(ValueError):
        LtToeplitz(F, [7])


def test_submatrix_shape_of_zero_minor():
    F = GF(7)
    A = LtToeplitz(F, [1, 2, 3, 4, 5])
    S = submatrix(A, [1, 2, 5], [1, 3, 4])
    a = A.col
    assert S == [[a[0], F(0), F(0)], [a[1], F(0), F(0)], [a[4], a[2], a[1]]]
    assert det(S) == F(0)
    assert not is_proper([1, 2, 5], [1, 3, 4])
    with pytest.raises(SizeMismatch):
        submatrix(A, [1, 2], [1])
    with pytest.raises(IndexOutOfRange):
        submatrix(A, [6], [1])
    with pytest.raises(NotSquare):
        det([[F(1), F(2)]])


@pytest.mark.parametrize("gamma", range(0, 6))
def test_enumerate_proper_matches_naive(gamma):
    got = [(p.rows, p.cols) for p in enumerate_proper(gamma)]
    assert sorted(got) == sorted(_naive_proper(gamma + 1))
    assert len(set(got)) == len(got)
    # ordered by size first
    assert [len(r) for r, _ in got] == sorted(len(r) for r, _ in got)


def test_enumerate_proper_small():
    assert [str(p) for p in enumerate_proper(1)] == [
        "s=1 I=1 J=1", "s=1 I=2 J=1", "s=1 I=2 J=2", "s=2 I=1,2 J=1,2",
    ]
    assert list(enumerate_proper(2, 3)) == [ProperIndexPair((1, 2, 3), (1, 2, 3))]


def test_example_matrix_superregular(gf64_matrix):
    assert is_superregular(gf64_matrix)


def test_gf2_witness():
    ok, wit = check_superregular(LtToeplitz(GF(2), [1, 1, 1]))
    assert not ok
    assert wit == ProperIndexPair((2, 3), (1, 2))
    ok, wit = check_superregular(LtToeplitz(GF(3), [1, 0, 1]))
    assert str(wit) == "s=1 I=2 J=1"


@pytest.mark.parametrize("q,gamma", [(2, 1), (2, 2), (3, 2), (4, 2), (3, 3), (5, 2)])
def test_predicate_matches_brute_force(q, gamma):
    F = GF(q)
    NF = NaiveField(F.p, F.modulus)
    for col in product(range(q), repeat=gamma + 1):
        assert is_superregular(LtToeplitz(F, col)) == naive_superregular(NF, col), col


def test_certificate_covers_all_pairs(gf64_matrix):
    cert = superregularity_certificate(gf64_matrix)
    assert len(cert) == len(_naive_proper(8))
    assert all(d for _, d in cert)


def test_determinant_against_leibniz():
    F = GF(16)
    NF = NaiveField(2, F.modulus)
    A = LtToeplitz(F, [1, 5, 9, 14, 3])
    for pair in enumerate_proper(4):
        S = submatrix(A, pair.rows, pair.cols)
        assert det(S).value == leibniz_det(NF, [[x.value for x in r] for r in S])


@pytest.mark.parametrize("l", range(0, 8))
def test_new_entry_pairs_cover_all_new_minors(l):
    every = {(p.rows, p.cols) for p in enumerate_proper(l)}
    older = {(p.rows, p.cols) for p in enumerate_proper(l - 1)} if l else set()
    # pairs of the leading (l+1)x(l+1) matrix that touch a_l, up to Toeplitz shift, all have i_s=l+1, j_1=1
    news = {(p.rows, p.cols) for p in new_entry_pairs(l)}
    assert news <= every
    assert not news & older
    for rows, cols in every:
        if any(i - j == l for i in rows for j in cols):
            assert rows[-1] == l + 1 and cols[0] == 1


@pytest.mark.parametrize("l", range(0, 9))
def test_essential_counts(l):
    # Catalan number C_l and the antidiagonal-symmetric count binom(l, l//2)
    catalan = comb(2 * l, l) // (l + 1)
    pairs = essential_pairs(l)
    assert len(pairs) == catalan
    sym = sum(1 for p in pairs if antidiagonal_pair(p, l + 1) == p)
    assert sym == comb(l, l // 2)
    assert len(essential_pairs(l, dedupe_antidiagonal=True)) == (catalan + sym) // 2


def test_antidiagonal_transpose_preserves_determinant():
    F = GF(11)
    A = LtToeplitz(F, [3, 1, 4, 1, 5])
    for pair in enumerate_proper(4):
        S = submatrix(A, pair.rows, pair.cols)
        assert det(antidiagonal_transpose(S)) == det(S)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([3, 4, 5, 7, 8]), st.data())
def test_incremental_full_equals_predicate(q, data):
    F = GF(q)
    col = data.draw(st.lists(st.integers(0, q - 1), min_size=1, max_size=5))
    assert is_superregular_incremental(F, col, full=True) == is_superregular(LtToeplitz(F, col))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([3, 5, 7, 9]), st.data())
def test_superregular_entries_nonzero(q, data):
    F = GF(q)
    col = data.draw(st.lists(st.integers(0, q - 1), min_size=1, max_size=4))
    if is_superregular(LtToeplitz(F, col)):
        assert all(col)
