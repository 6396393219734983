import random

import pytest

from conftest import random_superregular_batch
from oracle import NaiveField
from srkit.actions import (
    ActionLabel, act_frobenius, act_global_scale, act_inverse, act_scale, apply, canonical_form, format_word,
    orbit, orbit_with_words,
)
from srkit.errors import Singular, ZeroScalar
from srkit.field import GF
from srkit.search import count_superregular
from srkit.toeplitz import LtToeplitz, is_superregular


def _matmul_identity(A, B):
    F = A.field
    NF = NaiveField(F.p, F.modulus)
    a, b = A.dense(), B.dense()
    n = len(a)
    for i in range(n):
        for j in range(n):
            s = 0
            for t in range(n):
                s = NF.add(s, NF.mul(a[i][t], b[t][j]))
            if s != (1 if i == j else 0):
                return False
    return True


def test_inverse_pinned():
    A = LtToeplitz(GF(3), [1, 1, 2])
    assert act_inverse(A).values == (1, 2, 2)
    assert _matmul_identity(A, act_inverse(A))


def test_inverse_singular():
    with pytest.raises(Singular):
        act_inverse(LtToeplitz(GF(5), [0, 1]))


def test_zero_scalar():
    A = LtToeplitz(GF(5), [1, 2])
    with pytest.raises(ZeroScalar):
        act_scale(0, A)
    with pytest.raises(ZeroScalar):
        act_global_scale(0, A)
    with pytest.raises(ValueError):
        ActionLabel("transpose")


@pytest.mark.parametrize("A", random_superregular_batch(40, seed=11), ids=repr)
def test_actions_on_random_superregular(A):
    F = A.field
    assert _matmul_identity(A, act_inverse(A))
    assert act_inverse(act_inverse(A)) == A
    rng = random.Random(hash(A.values))
    al, be = (F.element(rng.randrange(1, F.q)) for _ in range(2))
    assert act_scale(al, act_scale(be, A)) == act_scale(al * be, A)
    assert act_scale(F.one, A) == A
    assert act_frobenius(1, act_frobenius(F.e - 1, A)) == A
    assert act_inverse(act_scale(al, A)) == act_scale(al, act_inverse(A))
    assert act_inverse(act_frobenius(1, A)) == act_frobenius(1, act_inverse(A))
    for B in (act_inverse(A), act_scale(al, A), act_frobenius(1, A), act_global_scale(be, A)):
        assert is_superregular(B)
    if A.gamma >= 2:
        assert act_inverse(A) != A


def test_self_inverse_below_threshold():
    # with a single subdiagonal, characteristic 2 allows A = A^-1
    A = LtToeplitz(GF(8), [1, 5])
    assert is_superregular(A) and act_inverse(A) == A
    assert act_inverse(LtToeplitz(GF(8), [1, 5, 3])) != LtToeplitz(GF(8), [1, 5, 3])


def test_orbit_words_reproduce_elements():
    A = LtToeplitz(GF(8), [1, 2, 5])
    assert is_superregular(A)
    words = orbit_with_words(A)
    for B, word in words.items():
        C = A
        for lab in word:
            C = apply(lab, C)
        assert C == B
        assert is_superregular(B)
    assert format_word((), A.field) == "identity"
    assert format_word((ActionLabel("inverse"), ActionLabel("scale", A.field.iexp(3))), A.field) == "scale(w^3) . inverse"


def test_canonical_form_is_orbit_invariant():
    A = LtToeplitz(GF(7), [2, 3, 6])
    assert is_superregular(A)
    c = canonical_form(A)
    assert all(canonical_form(B) == c for B in orbit(A))
    assert c in orbit(A)


@pytest.mark.parametrize("q", [3, 4, 5])
def test_sr_q2_even(q):
    # A and A^-1 are distinct for dimension >= 2, so the inverse pairs up SR(q, gamma)
    assert count_superregular(GF(q), 2) % 2 == 0
