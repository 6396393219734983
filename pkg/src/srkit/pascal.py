"""Binomial (Pascal) candidates: X^(gamma-1) for the bidiagonal all-ones X, reduced mod p."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import comb

from .errors import CapExceeded, NotPrime
from .field import GF, is_prime
from .toeplitz import LtToeplitz, check_superregular


@dataclass(frozen=True)
class PascalMatrix:
    dim: int
    col: tuple[int, ...]

    def mod(self, p: int) -> LtToeplitz:
        return pascal_mod_p(self.dim, p)


def _int_matmul(A, B):
    n = len(A)
    return [[sum(A[i][t] * B[t][j] for t in range(n)) for j in range(n)] for i in range(n)]


def pascal_power(dim: int) -> PascalMatrix:
    """X^(dim-1) by repeated integer multiplication, checked against the binomial column."""
    if dim < 1:
        raise ValueError("dimension must be >= 1")
    X = [[1 if i - j in (0, 1) else 0 for j in range(dim)] for i in range(dim)]
    P = [[int(i == j) for j in range(dim)] for i in range(dim)]
    for _ in range(dim - 1):
        P = _int_matmul(P, X)
    col = tuple(P[i][0] for i in range(dim))
    closed = tuple(comb(dim - 1, i) for i in range(dim))
    if col != closed:
        raise AssertionError(f"matrix power {col} disagrees with binomials {closed}")  # pragma: no cover
    for i in range(dim):
        for j in range(dim):
            if P[i][j] != (col[i - j] if i >= j else 0):
                raise AssertionError("power is not lower-triangular Toeplitz")  # pragma: no cover
    return PascalMatrix(dim, col)


def pascal_mod_p(dim: int, p: int) -> LtToeplitz:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    return LtToeplitz(GF(p), [comb(dim - 1, i) % p for i in range(dim)])


@dataclass
class PascalPrime:
    dim: int
    p: int
    matrix: LtToeplitz
    failures: list[tuple[int, str]] = dc_field(default_factory=list)


def pascal_min_prime(dim: int, cap: int = 10000) -> PascalPrime:
    """Smallest prime p <= cap making the reduced Pascal matrix superregular.

    ``failures`` lists each smaller prime with its failing minor.
    """
    if dim < 1:
        raise ValueError("dimension must be >= 1")
    failures = []
    for p in range(2, cap + 1):
        if not is_prime(p):
            continue
        T = pascal_mod_p(dim, p)
        ok, wit = check_superregular(T)
        if ok:
            return PascalPrime(dim, p, T, failures)
        failures.append((p, str(wit)))
    raise CapExceeded(f"no prime <= {cap} works for dimension {dim}", failures)
