"""Independent reference implementations used only by the tests.

Nothing here imports the package's arithmetic: field operations are redone
with plain integer polynomial arithmetic, determinants by Leibniz expansion,
and superregularity by brute force over all index sets.
"""

from itertools import combinations, permutations


def poly_mulmod(x, y, p, mod):
    """Multiply two encoded elements of GF(p^e) given as ints in base p."""
    e = len(mod) - 1
    a = [(x // p**i) % p for i in range(e)]
    b = [(y // p**i) % p for i in range(e)]
    prod = [0] * (2 * e)
    for i, u in enumerate(a):
        for j, v in enumerate(b):
            prod[i + j] = (prod[i + j] + u * v) % p
    for d in range(2 * e - 1, e - 1, -1):
        c = prod[d]
        if c:
            for k in range(e + 1):
                prod[d - e + k] = (prod[d - e + k] - c * mod[k]) % p
    return sum(prod[i] * p**i for i in range(e))


def poly_add(x, y, p, e):
    return sum((((x // p**i) + (y // p**i)) % p) * p**i for i in range(e))


def poly_neg(x, p, e):
    return sum(((-(x // p**i)) % p) * p**i for i in range(e))


class NaiveField:
    def __init__(self, p, mod):
        self.p, self.mod, self.e = p, list(mod), len(mod) - 1
        self.q = p**self.e

    def add(self, x, y):
        return poly_add(x, y, self.p, self.e)

    def neg(self, x):
        return poly_neg(x, self.p, self.e)

    def mul(self, x, y):
        return poly_mulmod(x, y, self.p, self.mod)


def leibniz_det(NF, M):
    n = len(M)
    total = 0
    for perm in permutations(range(n)):
        term = 1
        for r, c in enumerate(perm):
            term = NF.mul(term, M[r][c])
            if term == 0:
                break
        if term:
            inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
            total = NF.add(total, NF.neg(term) if inv % 2 else term)
    return total


def naive_superregular(NF, col):
    """Every s x s submatrix with j_nu <= i_nu has a nonzero determinant."""
    n = len(col)
    A = [[col[i - j] if i >= j else 0 for j in range(n)] for i in range(n)]
    for s in range(1, n + 1):
        for I in combinations(range(n), s):
            for J in combinations(range(n), s):
                if all(j <= i for i, j in zip(I, J)):
                    if leibniz_det(NF, [[A[i][j] for j in J] for i in I]) == 0:
                        return False
    return True


def naive_rank(NF, M):
    """Rank by trying all square submatrices, largest first (tiny matrices only)."""
    r, c = len(M), len(M[0]) if M else 0
    for s in range(min(r, c), 0, -1):
        for I in combinations(range(r), s):
            for J in combinations(range(c), s):
                if leibniz_det(NF, [[M[i][j] for j in J] for i in I]):
                    return s
    return 0
