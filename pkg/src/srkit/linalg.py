"""Dense exact linear algebra over a :class:`~srkit.field.FiniteField`.

Matrices are lists of rows of integer encodings; the public wrappers in
:mod:`srkit.toeplitz` accept :class:`~srkit.field.FieldElement` entries too.
"""

from __future__ import annotations

from .errors import NotSquare, Singular

MAX_DIM = 64


def det(F, M) -> int:
    """Determinant by Gaussian elimination with first-nonzero pivoting."""
    n = len(M)
    if any(len(r) != n for r in M):
        raise NotSquare(f"matrix is not square ({n} rows)")
    if n == 0:
        return 1
    if n > MAX_DIM:
        raise ValueError(f"dimension {n} exceeds {MAX_DIM}")
    A = [list(r) for r in M]
    if F.e == 1:
        return _det_prime(F.p, A)
    d = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            d = F.ineg(d)
        pc = A[c][c]
        d = F.imul(d, pc)
        inv = F.iinv(pc)
        rowc = A[c]
        for r in range(c + 1, n):
            x = A[r][c]
            if x:
                f = F.imul(x, inv)
                row = A[r]
                for k in range(c + 1, n):
                    if rowc[k]:
                        row[k] = F.isub(row[k], F.imul(f, rowc[k]))
    return d


def _det_prime(p, A):
    n = len(A)
    d = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c] % p), None)
        if piv is None:
            return 0
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            d = -d
        pc = A[c][c] % p
        d = d * pc % p
        inv = pow(pc, p - 2, p)
        rowc = A[c]
        for r in range(c + 1, n):
            x = A[r][c] % p
            if x:
                f = x * inv % p
                row = A[r]
                for k in range(c + 1, n):
                    row[k] = (row[k] - f * rowc[k]) % p
    return d % p


def rank(F, M) -> int:
    if not M:
        return 0
    A = [list(r) for r in M]
    rows, cols = len(A), len(A[0])
    rk = 0
    for c in range(cols):
        piv = next((r for r in range(rk, rows) if A[r][c]), None)
        if piv is None:
            continue
        A[rk], A[piv] = A[piv], A[rk]
        inv = F.iinv(A[rk][c])
        for r in range(rk + 1, rows):
            x = A[r][c]
            if x:
                f = F.imul(x, inv)
                A[r] = [F.isub(a, F.imul(f, b)) for a, b in zip(A[r], A[rk])]
        rk += 1
        if rk == rows:
            break
    return rk


def inverse(F, M):
    """Gauss-Jordan inverse; raises :class:`Singular`."""
    n = len(M)
    if any(len(r) != n for r in M):
        raise NotSquare("matrix is not square")
    A = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(M)]
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c]), None)
        if piv is None:
            raise Singular("matrix is singular")
        A[c], A[piv] = A[piv], A[c]
        inv = F.iinv(A[c][c])
        A[c] = [F.imul(inv, a) for a in A[c]]
        for r in range(n):
            if r != c and A[r][c]:
                f = A[r][c]
                A[r] = [F.isub(a, F.imul(f, b)) for a, b in zip(A[r], A[c])]
    return [row[n:] for row in A]


def matmul(F, A, B):
    inner = len(B)
    cols = len(B[0]) if B else 0
    out = []
    for row in A:
        out_row = []
        for j in range(cols):
            s = 0
            for k in range(inner):
                if row[k] and B[k][j]:
                    s = F.iadd(s, F.imul(row[k], B[k][j]))
            out_row.append(s)
        out.append(out_row)
    return out
