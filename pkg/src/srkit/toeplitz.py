"""Lower-triangular Toeplitz matrices and the superregularity predicate.

Index conventions: row/column indices of :class:`ProperIndexPair` are 1-based,
matching the usual way minors ``A^{i_1..i_s}_{j_1..j_s}`` are written.  A pair
is *proper* when ``j_nu <= i_nu`` for every position; those are the only
submatrices of a lower-triangular matrix that are not forced singular.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterator, NamedTuple, Sequence

from . import linalg
from .errors import IndexOutOfRange, NotSquare, SizeMismatch
from .field import FieldElement, FiniteField


class ProperIndexPair(NamedTuple):
    rows: tuple[int, ...]
    cols: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.rows)

    def __str__(self):
        return f"s={self.size} I={','.join(map(str, self.rows))} J={','.join(map(str, self.cols))}"


class LtToeplitz:
    """A (gamma+1) x (gamma+1) lower-triangular Toeplitz matrix, stored as its first column."""

    __slots__ = ("field", "values")

    def __init__(self, field: FiniteField, col: Sequence):
        vals = []
        for a in col:
            if isinstance(a, FieldElement):
                vals.append(field(a).value)
            elif isinstance(a, str):
                vals.append(field.parse(a).value)
            elif isinstance(a, int):
                if not 0 <= a < field.q:
                    raise ValueError(f"encoding {a} out of range for GF({field.q})")
                vals.append(a)
            else:
                raise TypeError(f"cannot build a field entry from {a!r}")
        if not vals:
            raise ValueError("empty first column")
        self.field = field
        self.values = tuple(vals)

    @classmethod
    def parse(cls, field: FiniteField, texts) -> "LtToeplitz":
        return cls(field, [field.parse(t) for t in texts])

    @property
    def gamma(self) -> int:
        return len(self.values) - 1

    @property
    def dim(self) -> int:
        return len(self.values)

    @property
    def col(self) -> list[FieldElement]:
        return [FieldElement(self.field, v) for v in self.values]

    def entry(self, i: int, j: int) -> FieldElement:
        """1-based entry: ``a_{i-j}`` on or below the diagonal, zero above."""
        n = self.dim
        if not (1 <= i <= n and 1 <= j <= n):
            raise IndexOutOfRange(f"({i},{j}) outside {n}x{n}")
        return FieldElement(self.field, self.values[i - j] if i >= j else 0)

    def dense(self) -> list[list[int]]:
        n, v = self.dim, self.values
        return [[v[i - j] if i >= j else 0 for j in range(n)] for i in range(n)]

    def format_col(self) -> list[str]:
        return [self.field.format(v) for v in self.values]

    def __eq__(self, other):
        return isinstance(other, LtToeplitz) and other.field == self.field and other.values == self.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return f"LtToeplitz(GF({self.field.q}), [{', '.join(self.format_col())}])"


def submatrix(A: LtToeplitz, rows: Sequence[int], cols: Sequence[int]) -> list[list[FieldElement]]:
    """Dense s x s submatrix with entries ``a_{i_nu - j_mu}`` (zero above the diagonal)."""
    vals = _sub_values(A.values, rows, cols)
    return [[FieldElement(A.field, v) for v in r] for r in vals]


def _sub_values(values, rows, cols):
    n = len(values)
    if len(rows) != len(cols):
        raise SizeMismatch(f"{len(rows)} rows vs {len(cols)} cols")
    for idx in (rows, cols):
        if any(not 1 <= x <= n for x in idx):
            raise IndexOutOfRange(f"index outside 1..{n}: {tuple(idx)}")
        if any(a >= b for a, b in zip(idx, idx[1:])):
            raise IndexOutOfRange(f"indices not strictly increasing: {tuple(idx)}")
    return [[values[i - j] if i >= j else 0 for j in cols] for i in rows]


def is_proper(rows: Sequence[int], cols: Sequence[int]) -> bool:
    return len(rows) == len(cols) and all(j <= i for i, j in zip(rows, cols))


def _proper_cols(rows, n, start=1):
    """All strictly increasing column tuples J with j_nu <= rows[nu], in lex order."""
    s = len(rows)
    out = []

    def rec(pos, lo, acc):
        if pos == s:
            out.append(tuple(acc))
            return
        # leave room for the remaining s-pos-1 columns
        for j in range(lo, min(rows[pos], n - (s - pos - 1)) + 1):
            acc.append(j)
            rec(pos + 1, j + 1, acc)
            acc.pop()

    rec(0, start, [])
    return out


def enumerate_proper(gamma: int, s="all") -> Iterator[ProperIndexPair]:
    """Every proper pair of a (gamma+1)-dimensional matrix, lexicographic on (s, I, J)."""
    n = gamma + 1
    sizes = range(1, n + 1) if s == "all" else [s]
    for size in sizes:
        if not 1 <= size <= n:
            raise ValueError(f"size {size} outside 1..{n}")
        for rows in combinations(range(1, n + 1), size):
            for cols in _proper_cols(rows, n):
                yield ProperIndexPair(rows, cols)


def det(M, field: FiniteField | None = None) -> FieldElement:
    """Exact determinant of a square matrix of field elements (or ints with ``field``)."""
    if field is None:
        field = next((x.field for r in M for x in r if isinstance(x, FieldElement)), None)
        if field is None:
            raise ValueError("cannot infer field; pass field=")
    if any(len(r) != len(M) for r in M):
        raise NotSquare("matrix is not square")
    vals = [[x.value if isinstance(x, FieldElement) else x for x in r] for r in M]
    return FieldElement(field, linalg.det(field, vals))


def _shift_key(pair):
    c = pair.cols[0] - 1
    return tuple(i - c for i in pair.rows), tuple(j - c for j in pair.cols)


def check_superregular(A: LtToeplitz) -> tuple[bool, ProperIndexPair | None]:
    """Return ``(True, None)`` or ``(False, first failing pair)`` in enumeration order.

    Toeplitz structure makes a submatrix depend only on its indices up to a
    common shift, so determinants are memoised per shift class.
    """
    F, vals = A.field, A.values
    if any(v == 0 for v in vals):
        # the 1x1 proper minors come first in the order; report the first zero one
        for pair in enumerate_proper(A.gamma, 1):
            if vals[pair.rows[0] - pair.cols[0]] == 0:
                return False, pair
    memo: dict = {}
    for pair in enumerate_proper(A.gamma):
        key = _shift_key(pair)
        d = memo.get(key)
        if d is None:
            d = memo[key] = linalg.det(F, _sub_values(vals, *key))
        if d == 0:
            return False, pair
    return True, None


def is_superregular(A: LtToeplitz) -> bool:
    return check_superregular(A)[0]


def superregularity_certificate(A: LtToeplitz) -> list[tuple[ProperIndexPair, FieldElement]]:
    """Exhaustive mode: every proper pair with its determinant."""
    F = A.field
    out = []
    for pair in enumerate_proper(A.gamma):
        out.append((pair, FieldElement(F, linalg.det(F, _sub_values(A.values, pair.rows, pair.cols)))))
    return out


# -- incremental check used by the search ----------------------------------

@lru_cache(maxsize=None)
def new_entry_pairs(l: int) -> tuple[ProperIndexPair, ...]:
    """Proper pairs of the leading (l+1)x(l+1) matrix containing the entry a_l.

    a_l occupies only position (l+1, 1) there, so these are the proper pairs
    with ``i_s = l+1`` and ``j_1 = 1``.
    """
    out = []
    for s in range(1, l + 2):
        for head in combinations(range(1, l + 1), s - 1):
            rows = head + (l + 1,)
            for cols in _proper_cols(rows, l + 1):
                if cols[0] == 1:
                    out.append(ProperIndexPair(rows, cols))
    return tuple(out)


def _cofactor_proper(pair) -> bool:
    rows, cols = pair.rows, pair.cols
    return all(cols[nu + 1] <= rows[nu] for nu in range(len(rows) - 1))


@lru_cache(maxsize=None)
def essential_pairs(l: int, dedupe_antidiagonal: bool = False) -> tuple[ProperIndexPair, ...]:
    """Pairs whose determinant is genuinely linear in a_l.

    A pair from :func:`new_entry_pairs` whose cofactor at (l+1, 1) is not
    proper is block triangular, so its determinant is a product of earlier
    proper minors and needs no new check.  With ``dedupe_antidiagonal`` only
    one member of each antidiagonal-transpose pair is kept (their
    determinants coincide for Toeplitz matrices).
    """
    pairs = [p for p in new_entry_pairs(l) if _cofactor_proper(p)]
    if not dedupe_antidiagonal:
        return tuple(pairs)
    seen, out = set(), []
    for p in pairs:
        t = antidiagonal_pair(p, l + 1)
        if t in seen:
            continue
        seen.add(p)
        out.append(p)
    return tuple(out)


def antidiagonal_pair(pair: ProperIndexPair, n: int) -> ProperIndexPair:
    """Index pair of the antidiagonal transpose inside an n x n matrix."""
    rows = tuple(sorted(n + 1 - j for j in pair.cols))
    cols = tuple(sorted(n + 1 - i for i in pair.rows))
    return ProperIndexPair(rows, cols)


def antidiagonal_transpose(M):
    n = len(M)
    return [[M[n - 1 - j][n - 1 - i] for j in range(n)] for i in range(n)]


def is_superregular_incremental(field: FiniteField, prefix: Sequence, full: bool = False) -> bool:
    """Check the entry a_l just appended to ``prefix = [a_0..a_l]``.

    By default only the proper submatrices containing a_l are tested; the
    shorter prefix is assumed to have passed already.  ``full=True`` checks
    every level, which makes the result equal to :func:`is_superregular` of the
    leading (l+1)x(l+1) matrix.
    """
    vals = LtToeplitz(field, prefix).values
    levels = range(len(vals)) if full else [len(vals) - 1]
    for l in levels:
        for pair in new_entry_pairs(l):
            if linalg.det(field, _sub_values(vals[: l + 1], pair.rows, pair.cols)) == 0:
                return False
    return True
