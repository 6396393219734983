from math import comb

import pytest

from srkit.errors import CapExceeded, NotPrime
from srkit.pascal import pascal_min_prime, pascal_mod_p, pascal_power
from srkit.toeplitz import is_superregular

# minimal primes found by pascal_min_prime and re-checked below with the full predicate
MIN_PRIME = {2: 2, 3: 5, 4: 7, 5: 11, 6: 23, 7: 43, 8: 79}


@pytest.mark.parametrize("dim", range(1, 31))
def test_power_matches_binomials(dim):
    assert pascal_power(dim).col == tuple(comb(dim - 1, i) for i in range(dim))


def test_power_small():
    assert pascal_power(2).col == (1, 1)
    assert pascal_power(4).col == (1, 3, 3, 1)
    assert pascal_power(6).col == (1, 5, 10, 10, 5, 1)
    with pytest.raises(ValueError):
        pascal_power(0)


def test_mod_p():
    assert pascal_mod_p(3, 2).values == (1, 0, 1)
    assert pascal_mod_p(4, 5).values == (1, 3, 3, 1)
    assert pascal_mod_p(3, 3).values == (1, 2, 1)
    with pytest.raises(NotPrime):
        pascal_mod_p(3, 4)


def test_gamma3_minimal_prime():
    assert not is_superregular(pascal_mod_p(3, 2))
    assert not is_superregular(pascal_mod_p(3, 3))
    r = pascal_min_prime(3)
    assert r.p == 5 and [p for p, _ in r.failures] == [2, 3]


@pytest.mark.parametrize("dim", sorted(MIN_PRIME))
def test_minimal_primes(dim):
    r = pascal_min_prime(dim, cap=10000)
    assert r.p == MIN_PRIME[dim]
    assert is_superregular(r.matrix)
    assert all(not is_superregular(pascal_mod_p(dim, p)) for p, _ in r.failures)


def test_cap_exceeded():
    with pytest.raises(CapExceeded) as exc:
        pascal_min_prime(5, cap=7)
    assert [p for p, _ in exc.value.failures] == [2, 3, 5, 7]
