"""Univariate polynomials over a finite field: tuples of encodings, constant term first, no trailing zeros."""

from __future__ import annotations

from itertools import permutations


def trim(a) -> tuple[int, ...]:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def deg(a) -> int:
    """Degree, with -1 for the zero polynomial."""
    return len(trim(a)) - 1


def add(F, a, b):
    n = max(len(a), len(b))
    a = tuple(a) + (0,) * (n - len(a))
    b = tuple(b) + (0,) * (n - len(b))
    return trim(F.iadd(x, y) for x, y in zip(a, b))


def neg(F, a):
    return tuple(F.ineg(x) for x in a)


def sub(F, a, b):
    return add(F, a, neg(F, b))


def mul(F, a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = F.iadd(out[i + j], F.imul(x, y))
    return trim(out)


def scale(F, c, a):
    return trim(F.imul(c, x) for x in a)


def divmod_(F, a, b):
    a, b = list(trim(a)), trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv = F.iinv(b[-1])
    qt = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = F.imul(a[-1], inv)
        shift = len(a) - len(b)
        qt[shift] = c
        for i, y in enumerate(b):
            a[shift + i] = F.isub(a[shift + i], F.imul(c, y))
        a = list(trim(a))
    return trim(qt), trim(a)


def monic(F, a):
    a = trim(a)
    return scale(F, F.iinv(a[-1]), a) if a else ()


def gcd(F, a, b):
    a, b = trim(a), trim(b)
    while b:
        a, b = b, divmod_(F, a, b)[1]
    return monic(F, a)


def det(F, M):
    """Leibniz determinant of a small square matrix of polynomials."""
    n = len(M)
    total = ()
    for perm in permutations(range(n)):
        term = (1,)
        for r, c in enumerate(perm):
            term = mul(F, term, M[r][c])
            if not term:
                break
        if not term:
            continue
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        total = sub(F, total, term) if inversions % 2 else add(F, total, term)
    return total
