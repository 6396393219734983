"""Counting machinery behind the field-size bound N_gamma + 1.

N_gamma = (C_{gamma-1} + binom(gamma-1, floor((gamma-1)/2))) / 2, where C is the
Catalan sequence: the first term counts the minors of a gamma x gamma
lower-triangular Toeplitz matrix whose determinant is linear in the last
entry, the second counts those among them that are symmetric about the
antidiagonal.  Any field with more than N_gamma elements carries a
gamma x gamma superregular matrix.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from itertools import combinations, product
from math import comb

from .errors import MembershipViolation


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("n must be >= 0")
    return comb(2 * n, n) // (n + 1)


def product_identity_check(gamma: int) -> dict:
    """Compare prod_{1<=i<=j<=gamma} (2+i+j)/(i+j) with binom(2(gamma+1), gamma+1)/(gamma+2)."""
    if gamma < 1:
        raise ValueError("gamma must be >= 1")
    lhs = Fraction(1)
    for j in range(1, gamma + 1):
        for i in range(1, j + 1):
            lhs *= Fraction(2 + i + j, i + j)
    rhs = Fraction(comb(2 * (gamma + 1), gamma + 1), gamma + 2)
    return {"lhs": lhs, "rhs": rhs, "equal": lhs == rhs}


# -- step sequences ---------------------------------------------------------
# A sequence is a tuple (x_0=0, x_1, ..., x_{i+1}=gamma), strictly increasing.

def _shape_ok(seq, i, gamma):
    return (
        len(seq) == i + 2
        and seq[0] == 0
        and seq[-1] == gamma
        and all(a < b for a, b in zip(seq, seq[1:]))
    )


def in_S(seq, i: int, gamma: int) -> bool:
    if not _shape_ok(seq, i, gamma):
        return False
    half = -(-i // 2)
    return all(seq[j] + seq[i - j + 1] <= gamma for j in range(half + 1))


def in_T(seq, i: int, gamma: int) -> bool:
    if not _shape_ok(seq, i, gamma):
        return False
    total = 0
    for m in range(i + 1):
        total += (-1) ** m * (seq[m + 1] - seq[m])
        if total < 0:
            return False
    return True


def _sequences(i, gamma):
    for interior in combinations(range(1, gamma), i):
        yield (0,) + interior + (gamma,)


def enumerate_S(i: int, gamma: int) -> list[tuple[int, ...]]:
    if i < 0 or gamma < 1:
        raise ValueError("need i >= 0 and gamma >= 1")
    return [s for s in _sequences(i, gamma) if in_S(s, i, gamma)]


def enumerate_T(i: int, gamma: int) -> list[tuple[int, ...]]:
    if i < 0 or gamma < 1:
        raise ValueError("need i >= 0 and gamma >= 1")
    return [t for t in _sequences(i, gamma) if in_T(t, i, gamma)]


def bijection_f(s) -> tuple[int, ...]:
    """S_{i,gamma} -> T_{i,gamma}.

    t_{2j} = t_{2j-1} + s_j - s_{j-1} and t_{2j+1} = t_{2j} + s_{i-j+1} - s_{i-j},
    with t_{-1} = s_{-1} = 0, evaluated in index order.  The gaps of t are the
    gaps of s taken alternately from the top and the bottom.
    """
    s = tuple(s)
    i, gamma = len(s) - 2, s[-1]
    if not in_S(s, i, gamma):
        raise MembershipViolation(f"{s} is not in S_{{{i},{gamma}}}")
    sm = lambda k: 0 if k < 0 else s[k]  # noqa: E731
    t = []
    prev = 0  # t_{-1}
    for idx in range(i + 2):
        if idx % 2 == 0:
            j = idx // 2
            cur = prev + sm(j) - sm(j - 1)
        else:
            j = (idx - 1) // 2
            cur = prev + s[i - j + 1] - s[i - j]
        t.append(cur)
        prev = cur
    return tuple(t)


def bijection_g(t) -> tuple[int, ...]:
    """T_{i,gamma} -> S_{i,gamma}.

    Forward chain s_j = s_{j-1} + t_{2j} - t_{2j-1} for j = 0..ceil(i/2), and
    backward chain s_{i-j} = s_{i-j+1} - t_{2j+1} + t_{2j} from s_{i+1} = gamma
    for j = 0..floor(i/2).  The two chains meet at index ceil(i/2).
    """
    t = tuple(t)
    i, gamma = len(t) - 2, t[-1]
    if not in_T(t, i, gamma):
        raise MembershipViolation(f"{t} is not in T_{{{i},{gamma}}}")
    tm = lambda k: 0 if k < 0 else t[k]  # noqa: E731
    s = [None] * (i + 2)
    prev = 0  # s_{-1}
    for j in range((i + 1) // 2 + 1):
        prev = prev + tm(2 * j) - tm(2 * j - 1)
        s[j] = prev
    meet = s[(i + 1) // 2]
    s[i + 1] = gamma
    for j in range(i // 2 + 1):
        val = s[i - j + 1] - t[2 * j + 1] + t[2 * j]
        if i - j == (i + 1) // 2 and val != meet:
            raise MembershipViolation("forward and backward chains disagree")  # pragma: no cover
        s[i - j] = val
    return tuple(s)


# -- planar walks -----------------------------------------------------------

def walk_count(n: int) -> int:
    """Nonnegative walks of length n with steps (1, 1) and (1, -1)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return comb(n, n // 2)


def walk_count_dp(n: int) -> int:
    """Same count by dynamic programming over heights."""
    heights = {0: 1}
    for _ in range(n):
        nxt: dict = {}
        for h, c in heights.items():
            for d in (1, -1):
                if h + d >= 0:
                    nxt[h + d] = nxt.get(h + d, 0) + c
        heights = nxt
    return sum(heights.values())


def nonnegative_walks(n: int):
    for steps in product((1, -1), repeat=n):
        h = 0
        for d in steps:
            h += d
            if h < 0:
                break
        else:
            yield steps


def walk_from_T(t) -> tuple[int, ...]:
    """Walk whose vertices (origin, turning points, end) have x-coordinates t."""
    steps = []
    for l in range(len(t) - 1):
        steps += [1 if l % 2 == 0 else -1] * (t[l + 1] - t[l])
    return tuple(steps)


def T_from_walk(steps) -> tuple[int, ...]:
    steps = tuple(steps)
    if not steps or steps[0] != 1:
        raise MembershipViolation("a nonnegative walk of positive length starts with an up step")
    xs = [0]
    for x in range(1, len(steps)):
        if steps[x] != steps[x - 1]:
            xs.append(x)
    xs.append(len(steps))
    return tuple(xs)


# -- the bound --------------------------------------------------------------

@dataclass
class BoundReport:
    gamma: int
    catalan_prev: int
    walks: int
    L_count: int
    Lprime_count: int
    N: int
    bound: int

    def as_dict(self) -> dict:
        return asdict(self)


def field_size_bound(gamma: int) -> BoundReport:
    """N_gamma and N_gamma + 1 for a gamma x gamma matrix."""
    if gamma < 1:
        raise ValueError("gamma must be >= 1")
    c = catalan(gamma - 1)
    w = walk_count(gamma - 1)
    if (c + w) % 2:
        raise AssertionError("C_{gamma-1} + walks must be even")  # pragma: no cover
    n = (c + w) // 2
    return BoundReport(gamma, c, w, c, w, n, n + 1)


def count_linear_minors(gamma: int) -> tuple[int, int]:
    """(|L_gamma|, |L'_gamma|) by direct enumeration of index pairs.

    Independent of the closed forms: lists the proper submatrices of a
    gamma x gamma matrix whose determinant is linear in the last entry, and
    those equal to their own antidiagonal transpose.
    """
    from .toeplitz import antidiagonal_pair, essential_pairs

    pairs = essential_pairs(gamma - 1)
    sym = sum(1 for p in pairs if antidiagonal_pair(p, gamma) == p)
    return len(pairs), sym
