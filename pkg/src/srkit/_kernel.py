"""Compiled depth-first search kernel (numba).

The kernel is resumable: all DFS state lives in arrays owned by the caller, so
the driver can run it in node-count slices, check the wall clock between
slices, and resume after each reported hit.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is optional
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(f):
            return f

        return wrap if not args or not callable(args[0]) else args[0]


MAX_TABLE_Q = 2048

EXHAUSTED, HIT, PAUSED = 0, 1, 2


@njit(cache=True)
def _det(M, s, ADD, MUL, NEG, INV):
    d = 1
    for c in range(s):
        piv = -1
        for r in range(c, s):
            if M[r, c] != 0:
                piv = r
                break
        if piv < 0:
            return 0
        if piv != c:
            for k in range(c, s):
                t = M[c, k]
                M[c, k] = M[piv, k]
                M[piv, k] = t
            d = NEG[d]
        pc = M[c, c]
        d = MUL[d, pc]
        inv = INV[pc]
        for r in range(c + 1, s):
            x = M[r, c]
            if x != 0:
                f = MUL[x, inv]
                for k in range(c + 1, s):
                    y = M[c, k]
                    if y != 0:
                        M[r, k] = ADD[M[r, k], NEG[MUL[f, y]]]
    return d


@njit(cache=True)
def _fill_candidates(l, a, cand, ncand, order, lvl_start, lvl_end, msize, moff, midx,
                     ADD, MUL, NEG, INV, forb, M, C):
    for v in range(forb.shape[0]):
        forb[v] = False
    for k in range(lvl_start[l], lvl_end[l]):
        s = msize[k]
        off = moff[k]
        for r in range(s):
            for c in range(s):
                t = midx[off + r * s + c]
                if t < 0 or t >= l:
                    M[r, c] = 0
                else:
                    M[r, c] = a[t]
        for r in range(s - 1):
            for c in range(s - 1):
                C[r, c] = M[r, c + 1]
        d = _det(M, s, ADD, MUL, NEG, INV)
        cf = _det(C, s - 1, ADD, MUL, NEG, INV)
        if (s - 1) % 2 == 1:
            cf = NEG[cf]
        # det = d + cf * a_l, so a_l = -d / cf is the single bad value
        forb[MUL[NEG[d], INV[cf]]] = True
    n = 0
    for i in range(order.shape[0]):
        v = order[i]
        if not forb[v]:
            cand[l, n] = v
            n += 1
    ncand[l] = n


@njit(cache=True)
def dfs(state_level, start, gamma, a, cand, ncand, pos, order, lvl_start, lvl_end, msize, moff, midx,
        ADD, MUL, NEG, INV, count_mode, max_nodes, counters):
    """Advance the DFS.  ``counters`` = [nodes, hits, deepest]; returns (status, level)."""
    q = ADD.shape[0]
    forb = np.zeros(q, dtype=np.bool_)
    M = np.zeros((gamma + 1, gamma + 1), dtype=np.int64)
    C = np.zeros((gamma + 1, gamma + 1), dtype=np.int64)
    level = state_level
    if level < 0:
        level = start
        _fill_candidates(level, a, cand, ncand, order, lvl_start, lvl_end, msize, moff, midx,
                         ADD, MUL, NEG, INV, forb, M, C)
        pos[level] = 0
    budget = max_nodes
    while True:
        if pos[level] < ncand[level]:
            a[level] = cand[level, pos[level]]
            pos[level] += 1
            counters[0] += 1
            budget -= 1
            if level > counters[2]:
                counters[2] = level
            if level == gamma:
                counters[1] += 1
                if count_mode == 0:
                    return HIT, level
            else:
                level += 1
                _fill_candidates(level, a, cand, ncand, order, lvl_start, lvl_end, msize, moff, midx,
                                 ADD, MUL, NEG, INV, forb, M, C)
                pos[level] = 0
            if budget <= 0:
                return PAUSED, level
        else:
            level -= 1
            if level < start:
                return EXHAUSTED, level


def field_tables(F):
    q = F.q
    ADD = np.empty((q, q), dtype=np.int64)
    MUL = np.empty((q, q), dtype=np.int64)
    for x in range(q):
        for y in range(x, q):
            ADD[x, y] = ADD[y, x] = F.iadd(x, y)
            MUL[x, y] = MUL[y, x] = F.imul(x, y)
    NEG = np.array([F.ineg(x) for x in range(q)], dtype=np.int64)
    INV = np.array([F.iinv(x) if x else 0 for x in range(q)], dtype=np.int64)
    return ADD, MUL, NEG, INV
