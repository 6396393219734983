import random
from itertools import product

import pytest

from oracle import NaiveField, naive_rank
from srkit import linalg
from srkit.codes import (
    CodeParams, PolyMatrix, coldist_bound, column_distance, column_distance_parity, complexity, expand,
    extract_mdp, extraction_indices, is_block_toeplitz, max_span_property, max_span_sliding,
    max_span_systematic, mdp_certify, parity_from_generator, singleton_bound, sliding, systematic_pair,
)
from srkit.errors import BudgetExceeded, NotSuperregular, SizeMismatch, TooSmall
from srkit.field import GF
from srkit.io import parse_polymatrix
from srkit.toeplitz import LtToeplitz, is_superregular


def _gf64_code(F):
    P = lambda *xs: tuple(F(x).value for x in xs)  # noqa: E731
    g, a, b = P("w^62", "w^57", "1"), P("w^54", "w^44", "w"), P("w^21", "w^17", "1")
    return PolyMatrix(F, [[g, ()], [(), g], [a, b]]), PolyMatrix(F, [[a], [b], [g]])


def _brute_coldist(G, j):
    """Minimum weight over every truncated word with u_0 != 0, no pruning."""
    F = G.field
    NF = NaiveField(F.p, F.modulus)
    n, k = G.shape
    S = sliding(G, j)
    best = None
    for u in product(range(F.q), repeat=k * (j + 1)):
        if not any(u[:k]):
            continue
        w = 0
        for row in S:
            s = 0
            for x, y in zip(row, u):
                s = NF.add(s, NF.mul(x, y))
            w += s != 0
        best = w if best is None else min(best, w)
    return best


def _random_systematic(rng, F, n, k, deg):
    P = [[tuple(rng.randrange(F.q) for _ in range(deg + 1)) for _ in range(k)] for _ in range(n - k)]
    return systematic_pair(F, P)


def test_params_and_bounds():
    p = CodeParams(3, 2, 2)
    assert p.L == 3
    assert coldist_bound(p, 3) == 5
    assert singleton_bound(p) == 5
    assert singleton_bound(CodeParams(2, 1, 0)) == 2
    with pytest.raises(ValueError):
        CodeParams(2, 2, 0)
    with pytest.raises(ValueError):
        CodeParams(3, 1, -1)


def test_expand_example():
    F = GF(64)
    G, _ = _gf64_code(F)
    C = expand(G)
    assert len(C) == 3
    assert [F.format(C[i][0][0]) for i in range(3)] == ["w^62", "w^57", "1"]
    Z = PolyMatrix(F, [[(), ()], [(), ()]])
    assert expand(Z) == [[[0, 0], [0, 0]]]
    assert G.column_degrees() == [2, 2]


def test_sliding_structure():
    F = GF(5)
    G = PolyMatrix(F, [[(1, 2)], [(3, 0, 4)]])
    S = sliding(G, 3)
    assert len(S) == 8 and len(S[0]) == 4
    assert is_block_toeplitz(S, 2, 1)
    assert [r[0] for r in S] == [1, 3, 2, 0, 0, 4, 0, 0]
    assert sliding(G, 0) == [[1], [3]]
    with pytest.raises(ValueError):
        sliding(G, -1)


@pytest.mark.parametrize("seed", range(8))
def test_sliding_duality(seed):
    rng = random.Random(seed)
    F = GF(rng.choice([2, 3, 4, 5, 7]))
    n = rng.choice([2, 3])
    k = rng.randint(1, n - 1)
    G, H = _random_systematic(rng, F, n, k, rng.randint(0, 2))
    assert (H.transpose() @ G).is_zero()
    for j in range(5):
        HT, Gs = sliding(H, j, "parity"), sliding(G, j)
        assert all(v == 0 for row in linalg.matmul(F, HT, Gs) for v in row)


def test_rank_against_oracle():
    F = GF(4)
    NF = NaiveField(2, F.modulus)
    rng = random.Random(3)
    for _ in range(30):
        M = [[rng.randrange(4) for _ in range(4)] for _ in range(3)]
        assert linalg.rank(F, M) == naive_rank(NF, M)


@pytest.mark.parametrize("seed", range(12))
def test_column_distance_matches_brute_force(seed):
    rng = random.Random(100 + seed)
    F = GF(rng.choice([2, 3, 4]))
    n = rng.choice([2, 3])
    k = rng.randint(1, min(2, n - 1))
    G, H = _random_systematic(rng, F, n, k, rng.randint(0, 2))
    for j in range(3):
        if F.q ** (k * (j + 1)) > 5000:
            break
        d = column_distance(G, j)
        assert d == _brute_coldist(G, j)
        assert d == column_distance_parity(F, sliding(H, j, "parity"), n)


def test_block_code_distance():
    F = GF(3)
    # [3,2] MDS code: x + y + z = 0 has minimum distance 2
    G = PolyMatrix(F, [[(1,), ()], [(), (1,)], [(2,), (2,)]])
    assert column_distance(G, 0) == 2
    rep = mdp_certify(G, CodeParams(3, 2, 0))
    assert rep["L"] == 0 and rep["mdp"] and rep["profile"] == [2]


def test_column_distance_budget():
    G, _ = _gf64_code(GF(64))
    with pytest.raises(BudgetExceeded):
        column_distance(G, 2, budget=10_000)


def test_example_code_profile():
    F = GF(64)
    G, H = _gf64_code(F)
    assert complexity(G) == 4
    assert parity_from_generator(G) == H
    rep = mdp_certify(G, CodeParams(3, 2, 2), H)
    assert rep["profile"] == [2, 3, 4, 4]
    assert rep["generator_side"][:2] == [2, 3]
    assert rep["sides_agree"] and not rep["mdp"]
    assert rep["bounds"] == [2, 3, 4, 5]


def test_example_files_parse(data_dir):
    F = GF(64)
    G, H = _gf64_code(F)
    assert parse_polymatrix((data_dir / "gf64_code_G.pm").read_text()) == G
    assert parse_polymatrix((data_dir / "gf64_code_H.pm").read_text()) == H


def test_certify_rejects_bad_pair():
    F = GF(5)
    G, H = systematic_pair(F, [[(1, 2)]])
    bad = PolyMatrix(F, [[(1,)], [(1,)]])
    with pytest.raises(ValueError):
        mdp_certify(G, CodeParams(2, 1, 1), bad)
    with pytest.raises(SizeMismatch):
        mdp_certify(G, CodeParams(3, 1, 1))


def test_max_span_trivial_cases():
    F = GF(5)
    M = [[1 if i == j else 0 for j in range(6)] for i in range(3)]
    assert max_span_property(F, M, 3, 3) == (True, None)
    ok, wit = max_span_property(F, [[1, 1, 0], [0, 0, 1]], 1, 2)
    assert not ok and wit == (0, (1,))
    with pytest.raises(SizeMismatch):
        max_span_property(F, M, 7, 1)


def _equivalence(F, gamma):
    """Superregular T of dimension gamma+1 iff [I|T] passes the rate 1/2 max-span test."""
    for col in product(range(F.q), repeat=gamma + 1):
        T = LtToeplitz(F, col)
        M = [[1 if i == c else 0 for c in range(gamma + 1)] + row for i, row in enumerate(T.dense())]
        if is_superregular(T) != max_span_systematic(F, M, 2, 1, gamma)[0]:
            return col
    return None


@pytest.mark.parametrize("q,gamma", [(5, 0), (5, 1), (5, 2), (7, 2)])
def test_superregular_iff_max_span(q, gamma):
    assert _equivalence(GF(q), gamma) is None


def test_example_extraction(gf64_matrix):
    F = gf64_matrix.field
    r = extract_mdp(gf64_matrix, CodeParams(3, 2, 2))
    assert r.rows == [2, 4, 6, 8] and r.cols == list(range(1, 9))
    assert r.max_span
    T = [[F.format(v) for v in row[4:]] for row in r.assembled]
    assert T[0][:2] == ["w", "1"]
    assert T[3] == ["1", "w", "w^9", "w^33", "w^33", "w^9", "w", "1"]
    assert is_block_toeplitz(r.tprime, 1, 2)


def test_extraction_shapes():
    for n, k, j in [(2, 1, 0), (2, 1, 2), (3, 1, 1), (3, 2, 1), (4, 2, 1)]:
        rows, cols = extraction_indices(n, k, j)
        assert len(rows) == (j + 1) * (n - k) and len(cols) == (j + 1) * k
    G17 = GF(17)
    T = LtToeplitz(G17, [1, 1, 2, 12, 13, 5, 11])
    r = extract_mdp(T, CodeParams(3, 1, 1), j=2)
    assert len(r.tprime) == 6 and len(r.tprime[0]) == 3
    assert is_block_toeplitz(r.tprime, 2, 1) and r.max_span
    r = extract_mdp(T, CodeParams(2, 1, 1), j=0)
    assert r.tprime == [[1]]  # rows {1}, cols {1}: the entry a_0


def test_extraction_errors():
    F = GF(5)
    with pytest.raises(TooSmall):
        extract_mdp(LtToeplitz(F, [1, 1, 2]), CodeParams(3, 2, 2))
    with pytest.raises(NotSuperregular):
        extract_mdp(LtToeplitz(F, [1, 0, 1]), CodeParams(2, 1, 1), j=1)
    r = extract_mdp(LtToeplitz(F, [1, 0, 1]), CodeParams(2, 1, 1), j=1, unchecked=True)
    assert not r.max_span


def test_sliding_variant_on_systematic_code():
    F = GF(17)
    T = LtToeplitz(F, [1, 1, 2, 12, 13, 5, 11])
    # rate 1/2: H(s)^T = [t(s), -1] style systematic code from the first column of T
    t = tuple(T.values[:3])
    G, H = systematic_pair(F, [[t]])
    for j in range(3):
        HT = sliding(H, j, "parity")
        ok = max_span_sliding(F, HT, 2, 1, j)[0]
        assert ok == (column_distance_parity(F, HT, 2) == coldist_bound(CodeParams(2, 1, 2), j))
