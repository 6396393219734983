"""Convolutional-code side: sliding matrices, column distances, the maximum span property, MDP extraction.

A generator matrix G(s) is n x k, a parity-check matrix H(s) is n x (n-k), and
the code is {G(s) u(s)} = ker H(s)^T.  Codes are assumed observable and
generator matrices minimal; that is asserted by the caller, not proven here.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from . import linalg, poly
from .errors import BudgetExceeded, NotSuperregular, SizeMismatch, TooSmall
from .field import FieldElement, FiniteField
from .toeplitz import LtToeplitz, check_superregular

DEFAULT_ENUM_BUDGET = 2_000_000


@dataclass(frozen=True)
class CodeParams:
    n: int
    k: int
    delta: int

    def __post_init__(self):
        if not 0 < self.k < self.n:
            raise ValueError("need 0 < k < n")
        if self.delta < 0:
            raise ValueError("delta must be >= 0")

    @property
    def L(self) -> int:
        return self.delta // self.k + self.delta // (self.n - self.k)

    def singleton_bound(self) -> int:
        return singleton_bound(self)

    def coldist_bound(self, j: int) -> int:
        return coldist_bound(self, j)


def singleton_bound(params: CodeParams) -> int:
    """Generalized Singleton bound on the free distance."""
    n, k, d = params.n, params.k, params.delta
    return (n - k) * (d // k + 1) + d + 1


def coldist_bound(params: CodeParams, j: int) -> int:
    return (params.n - params.k) * (j + 1) + 1


class PolyMatrix:
    """rows x cols matrix of polynomials (tuples of encodings, constant term first)."""

    def __init__(self, field: FiniteField, entries):
        self.field = field
        self.entries = [[poly.trim(_poly_values(field, e)) for e in row] for row in entries]
        if not self.entries or any(len(r) != len(self.entries[0]) for r in self.entries):
            raise SizeMismatch("ragged polynomial matrix")

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.entries), len(self.entries[0])

    def column_degrees(self) -> list[int]:
        r, c = self.shape
        return [max(poly.deg(self.entries[i][j]) for i in range(r)) for j in range(c)]

    def degree(self) -> int:
        return max(self.column_degrees())

    def expand(self) -> list[list[list[int]]]:
        """Coefficient matrices G_0, ..., G_m with G(s) = sum G_i s^i (at least one)."""
        r, c = self.shape
        m = max(self.degree(), 0)
        return [
            [[self.entries[a][b][i] if i < len(self.entries[a][b]) else 0 for b in range(c)] for a in range(r)]
            for i in range(m + 1)
        ]

    def transpose(self) -> "PolyMatrix":
        r, c = self.shape
        return PolyMatrix(self.field, [[self.entries[a][b] for a in range(r)] for b in range(c)])

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        F = self.field
        r, inner = self.shape
        inner2, c = other.shape
        if inner != inner2:
            raise SizeMismatch("inner dimensions differ")
        out = []
        for a in range(r):
            row = []
            for b in range(c):
                acc = ()
                for t in range(inner):
                    acc = poly.add(F, acc, poly.mul(F, self.entries[a][t], other.entries[t][b]))
                row.append(acc)
            out.append(row)
        return PolyMatrix(F, out)

    def is_zero(self) -> bool:
        return all(not e for row in self.entries for e in row)

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and other.field == self.field and other.entries == self.entries

    def __repr__(self):
        return f"PolyMatrix({self.shape[0]}x{self.shape[1]} over GF({self.field.q}))"


def _poly_values(F, e):
    if isinstance(e, (tuple, list)):
        return [F(x).value if not isinstance(x, int) else x for x in e]
    raise TypeError(f"polynomial entry must be a coefficient sequence, got {e!r}")


def expand(P: PolyMatrix):
    return P.expand()


def sliding(P: PolyMatrix, j: int, orientation: str = "generator") -> list[list[int]]:
    """Truncated sliding matrix with j+1 block rows/columns.

    ``generator``: block (r, c) is G_{r-c}.  ``parity``: P is H(s) and the
    result is (H_j^c)^T, whose block (r, c) is H_{r-c}^T.  Coefficients beyond
    the degree are zero.
    """
    if j < 0:
        raise ValueError("j must be >= 0")
    coeffs = P.expand()
    if orientation == "parity":
        coeffs = [[list(col) for col in zip(*C)] for C in coeffs]
    elif orientation != "generator":
        raise ValueError("orientation must be 'generator' or 'parity'")
    br, bc = len(coeffs[0]), len(coeffs[0][0])
    out = [[0] * ((j + 1) * bc) for _ in range((j + 1) * br)]
    for r in range(j + 1):
        for c in range(r + 1):
            if r - c < len(coeffs):
                blk = coeffs[r - c]
                for a in range(br):
                    for b in range(bc):
                        out[r * br + a][c * bc + b] = blk[a][b]
    return out


def _nonzero_projective(F, k):
    """One representative per line of F^k: first nonzero coordinate equal to 1."""
    for lead in range(k):
        for tail in product(range(F.q), repeat=k - lead - 1):
            yield (0,) * lead + (1,) + tail


def column_distance(G: PolyMatrix, j: int, budget: int = DEFAULT_ENUM_BUDGET) -> int:
    """d_j^c by enumerating truncated information words (u_0, ..., u_j) with u_0 != 0.

    Weight is invariant under scaling, so u_0 runs over projective
    representatives.  Blocks of the codeword are final once the matching
    information block is chosen, which allows branch-and-bound on the
    partial weight.  ``budget`` caps the nominal number of words.
    """
    F = G.field
    n, k = G.shape
    q = F.q
    nominal = (q**k - 1) // (q - 1) * q ** (k * j)
    if nominal > budget:
        raise BudgetExceeded(f"{nominal} information words exceed budget {budget}")
    coeffs = G.expand()
    Gi = [coeffs[i] if i < len(coeffs) else [[0] * k for _ in range(n)] for i in range(j + 1)]
    all_words = list(product(range(q), repeat=k))
    best = [(n * (j + 1)) + 1]

    def block_contrib(t, u):
        # contribution of information block u (placed at time t) to code blocks t..j
        out = []
        for r in range(t, j + 1):
            C = Gi[r - t]
            out.append([_dot(F, C[a], u) for a in range(n)])
        return out

    def rec(t, acc, weight):
        if t > j:
            if weight < best[0]:
                best[0] = weight
            return
        for u in (_nonzero_projective(F, k) if t == 0 else all_words):
            contrib = block_contrib(t, u)
            new_acc = [
                [F.iadd(x, y) for x, y in zip(acc[r - t], contrib[r - t])] for r in range(t, j + 1)
            ]
            w = weight + sum(1 for x in new_acc[0] if x)
            if w >= best[0]:
                continue
            rec(t + 1, new_acc[1:], w)

    rec(0, [[0] * n for _ in range(j + 1)], 0)
    return best[0]


def _dot(F, row, u):
    s = 0
    for x, y in zip(row, u):
        if x and y:
            s = F.iadd(s, F.imul(x, y))
    return s


def in_span(F, M, c, others) -> bool:
    """Whether column c of M lies in the span of the given columns."""
    cols = [[M[r][x] for x in others] for r in range(len(M))]
    with_c = [row + [M[r][c]] for r, row in enumerate(cols)]
    return linalg.rank(F, with_c) == (linalg.rank(F, cols) if others else 0)


def max_span_property(F, M, w: int, d: int, offset: int = 0):
    """True iff none of columns offset..offset+w-1 lies in the span of any other d-1 columns.

    Returns ``(ok, witness)`` with witness ``(column, spanning_columns)`` (0-based)
    on failure.
    """
    ncols = len(M[0])
    if offset + w > ncols:
        raise SizeMismatch("prefix exceeds column count")
    for c in range(offset, offset + w):
        rest = [x for x in range(ncols) if x != c]
        size = min(d - 1, len(rest))
        for S in combinations(rest, size):
            if in_span(F, M, c, S):
                return False, (c, S)
    return True, None


def max_span_sliding(F, HT, n: int, k: int, j: int):
    """Variant on (H_j^c)^T itself: none of its first n columns in the span of (j+1)(n-k)-1 others."""
    return max_span_property(F, HT, n, (j + 1) * (n - k))


def max_span_systematic(F, M, n: int, k: int, j: int):
    """Variant on [I_{(j+1)(n-k)} | H^]: none of the first k columns of H^ in the span of (j+1)(n-k)-1 others."""
    r = (j + 1) * (n - k)
    return max_span_property(F, M, k, r, offset=r)


def column_distance_parity(F, HT, n: int, budget: int = DEFAULT_ENUM_BUDGET) -> int:
    """d_j^c from (H_j^c)^T: one plus the least t such that a first-block column is in the span of t others.

    A kernel vector with nonzero first block has a first-block column with
    nonzero coefficient, and vice versa, so this equals the minimum weight
    of a truncated codeword with v_0 != 0.
    """
    ncols = len(HT[0])
    work = 0
    for t in range(0, ncols):
        for c in range(n):
            rest = [x for x in range(ncols) if x != c]
            for S in combinations(rest, t):
                work += 1
                if work > budget:
                    raise BudgetExceeded(f"span tests exceed budget {budget}")
                if in_span(F, HT, c, S):
                    return t + 1
    return ncols + 1  # pragma: no cover - the last column set always spans


# -- constructions ------------------------------------------------------------

@dataclass
class MdpExtraction:
    tprime: list[list[int]]
    assembled: list[list[int]]
    rows: list[int]
    cols: list[int]
    max_span: bool


def extraction_indices(n: int, k: int, j: int) -> tuple[list[int], list[int]]:
    """1-based row and column indices selecting T' out of T."""
    rows = [b * (n - 1) + r for b in range(j + 1) for r in range(k, n)]
    cols = [b * (n - 1) + c for b in range(j + 1) for c in range(1, k + 1)]
    return rows, cols


def extract_mdp(T: LtToeplitz, params: CodeParams, j: int | None = None, unchecked: bool = False) -> MdpExtraction:
    """Cut T' out of a superregular T and assemble [I | T'] with the maximum span property."""
    n, k = params.n, params.k
    if j is None:
        j = params.L
    need = (j + 1) * (n - 1)
    if T.dim < need:
        raise TooSmall(f"need dimension >= {need}, got {T.dim}")
    if not unchecked:
        ok, wit = check_superregular(T)
        if not ok:
            raise NotSuperregular(f"input is not superregular (FAIL {wit})")
    rows, cols = extraction_indices(n, k, j)
    full = T.dense()
    tprime = [[full[i - 1][c - 1] for c in cols] for i in rows]
    r = len(rows)
    assembled = [[1 if a == b else 0 for b in range(r)] + tprime[a] for a in range(r)]
    ok, _ = max_span_systematic(T.field, assembled, n, k, j)
    return MdpExtraction(tprime, assembled, rows, cols, ok)


def is_block_toeplitz(M, br: int, bc: int) -> bool:
    """Block lower-triangular Toeplitz with br x bc blocks."""
    nr, nc = len(M) // br, len(M[0]) // bc
    blocks = {}
    for r in range(nr):
        for c in range(nc):
            blk = tuple(tuple(M[r * br + a][c * bc + b] for b in range(bc)) for a in range(br))
            if c > r:
                if any(any(x for x in row) for row in blk):
                    return False
            elif blocks.setdefault(r - c, blk) != blk:
                return False
    return True


def complexity(G: PolyMatrix) -> int:
    """Maximum degree of the k x k minors of G."""
    n, k = G.shape
    best = -1
    for rows in combinations(range(n), k):
        m = poly.det(G.field, [G.entries[r] for r in rows])
        best = max(best, poly.deg(m))
    return best


def high_order_rank(G: PolyMatrix) -> int:
    F = G.field
    n, k = G.shape
    degs = G.column_degrees()
    Ginf = [[G.entries[a][b][degs[b]] if degs[b] >= 0 and degs[b] < len(G.entries[a][b]) else 0 for b in range(k)]
            for a in range(n)]
    return linalg.rank(F, Ginf)


def parity_from_generator(G: PolyMatrix) -> PolyMatrix:
    """For n - k = 1: h_i = (-1)^(i+n) det(G without row i), divided by the gcd of the h_i."""
    F = G.field
    n, k = G.shape
    if n - k != 1:
        raise ValueError("automatic parity derivation needs n - k = 1")
    h = []
    for i in range(n):
        minor = poly.det(F, [G.entries[r] for r in range(n) if r != i])
        h.append(poly.neg(F, minor) if (i + n + 1) % 2 else minor)
    g = ()
    for x in h:
        g = poly.gcd(F, g, x)
    if g and g != (1,):
        h = [poly.divmod_(F, x, g)[0] for x in h]
    return PolyMatrix(F, [[x] for x in h])


def mdp_certify(G: PolyMatrix, params: CodeParams, H: PolyMatrix | None = None,
                budget: int = DEFAULT_ENUM_BUDGET) -> dict:
    """Column distance profile d_0..d_L and whether d_L meets (L+1)(n-k)+1.

    Distances come from the parity side when H is given (or derivable for
    n - k = 1); the generator-side enumeration also runs wherever it fits the
    budget and must agree.
    """
    F = G.field
    n, k = G.shape
    if (n, k) != (params.n, params.k):
        raise SizeMismatch(f"generator is {n}x{k}, params say n={params.n} k={params.k}")
    if H is None and n - k == 1:
        H = parity_from_generator(G)
    if H is not None and not (H.transpose() @ G).is_zero():
        raise ValueError("H^T G != 0")
    L = params.L
    profile, gen_side, agree = [], [], True
    for j in range(L + 1):
        d_par = column_distance_parity(F, sliding(H, j, "parity"), n, budget) if H is not None else None
        try:
            d_gen = column_distance(G, j, budget)
        except BudgetExceeded:
            d_gen = None
        if d_par is None and d_gen is None:
            raise BudgetExceeded(f"no side can compute d_{j}^c within budget")
        if d_par is not None and d_gen is not None and d_par != d_gen:
            agree = False
        gen_side.append(d_gen)
        profile.append(d_par if d_par is not None else d_gen)
    delta_actual = complexity(G)
    bound_L = coldist_bound(params, L)
    return {
        "n": n,
        "k": k,
        "delta": params.delta,
        "L": L,
        "computed_delta": delta_actual,
        "column_degrees": G.column_degrees(),
        "minimal": high_order_rank(G) == k and sum(G.column_degrees()) == delta_actual,
        "profile": profile,
        "generator_side": gen_side,
        "sides_agree": agree,
        "bounds": [coldist_bound(params, j) for j in range(L + 1)],
        "singleton": singleton_bound(params),
        "mdp": profile[L] == bound_L,
    }


def systematic_pair(F, P: list[list[tuple]]) -> tuple[PolyMatrix, PolyMatrix]:
    """G = [I_k; P(s)] and H = [-P(s)^T; I_{n-k}] for an (n-k) x k polynomial matrix P."""
    r, k = len(P), len(P[0])
    G = [[(1,) if a == b else () for b in range(k)] for a in range(k)] + [list(row) for row in P]
    H = [[poly.neg(F, P[b][a]) for b in range(r)] for a in range(k)] + [
        [(1,) if a == b else () for b in range(r)] for a in range(r)
    ]
    return PolyMatrix(F, G), PolyMatrix(F, H)


def as_elements(F, M):
    return [[FieldElement(F, v) for v in row] for row in M]
