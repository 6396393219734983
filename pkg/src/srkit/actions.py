"""Superregularity-preserving actions on lower-triangular Toeplitz matrices.

* ``inverse``: A -> A^{-1} (an action of Z via A^{(-1)^x}).
* ``scale``: alpha . A, first-column entry k multiplied by alpha^k (conjugation by
  diag(1, alpha, ..., alpha^gamma)).
* ``frobenius``: every entry raised to p^i.
* ``global-scale``: every entry multiplied by a nonzero c.  Not one of the
  classical three; each s x s determinant picks up c^s, so superregularity is
  kept.  It is what lets the search fix a_0 = 1.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import Singular, ZeroScalar
from .field import FieldElement
from .toeplitz import LtToeplitz

KINDS = ("inverse", "scale", "frobenius", "global-scale")


@dataclass(frozen=True)
class ActionLabel:
    kind: str
    param: int = 0  # field encoding for scale/global-scale, exponent for frobenius

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown action kind {self.kind!r}")


def _scalar(A, alpha) -> int:
    v = A.field(alpha).value
    if v == 0:
        raise ZeroScalar("scalar must be nonzero")
    return v


def act_inverse(A: LtToeplitz) -> LtToeplitz:
    """Inverse of A, computed as the reciprocal power series of its first column."""
    F, a = A.field, A.values
    if a[0] == 0:
        raise Singular("a_0 = 0, matrix not invertible")
    inv0 = F.iinv(a[0])
    b = [inv0]
    for k in range(1, len(a)):
        s = 0
        for i in range(1, k + 1):
            if a[i]:
                s = F.iadd(s, F.imul(a[i], b[k - i]))
        b.append(F.imul(F.ineg(s), inv0))
    return LtToeplitz(F, b)


def act_scale(alpha, A: LtToeplitz) -> LtToeplitz:
    F = A.field
    al = _scalar(A, alpha)
    out, pw = [], 1
    for v in A.values:
        out.append(F.imul(pw, v))
        pw = F.imul(pw, al)
    return LtToeplitz(F, out)


def act_frobenius(i: int, A: LtToeplitz) -> LtToeplitz:
    F = A.field
    return LtToeplitz(F, [F.ifrobenius(v, i) for v in A.values])


def act_global_scale(c, A: LtToeplitz) -> LtToeplitz:
    F = A.field
    cv = _scalar(A, c)
    return LtToeplitz(F, [F.imul(cv, v) for v in A.values])


def apply(label: ActionLabel, A: LtToeplitz) -> LtToeplitz:
    if label.kind == "inverse":
        return act_inverse(A)
    if label.kind == "scale":
        return act_scale(FieldElement(A.field, label.param), A)
    if label.kind == "frobenius":
        return act_frobenius(label.param, A)
    return act_global_scale(FieldElement(A.field, label.param), A)


def generators(field, kinds) -> list[ActionLabel]:
    """One generator per requested kind; the primitive element generates F*."""
    out = []
    for k in kinds:
        if k == "inverse":
            out.append(ActionLabel("inverse"))
        elif k == "frobenius":
            if field.e > 1:
                out.append(ActionLabel("frobenius", 1))
        elif k in ("scale", "global-scale"):
            if field.q > 2:
                out.append(ActionLabel(k, field.primitive.value))
        else:
            raise ValueError(f"unknown action kind {k!r}")
    return out


def _push(word, label, field):
    """Append ``label`` (applied last) to a reduced word, merging like neighbours."""
    if word:
        last = word[-1]
        if last.kind == label.kind:
            if label.kind == "inverse":
                return word[:-1]
            if label.kind == "frobenius":
                i = (last.param + label.param) % field.e
                return word[:-1] + ((ActionLabel("frobenius", i),) if i else ())
            v = field.imul(last.param, label.param)
            return word[:-1] + ((ActionLabel(label.kind, v),) if v != 1 else ())
    return word + (label,)


def format_word(word, field) -> str:
    """Render a word as function composition, last-applied action first."""
    if not word:
        return "identity"
    parts = []
    for lab in reversed(word):
        if lab.kind == "inverse":
            parts.append("inverse")
        elif lab.kind == "frobenius":
            parts.append(f"frobenius({lab.param})")
        else:
            parts.append(f"{lab.kind}({field.format(lab.param)})")
    return " . ".join(parts)


def orbit_with_words(A: LtToeplitz, kinds=KINDS) -> dict:
    """Breadth-first closure of {A}; maps each orbit element to a word reaching it."""
    F = A.field
    gens = generators(F, kinds)
    words = {A: ()}
    queue = deque([A])
    while queue:
        B = queue.popleft()
        for g in gens:
            C = apply(g, B)
            if C not in words:
                words[C] = _push(words[B], g, F)
                queue.append(C)
    return words


def orbit(A: LtToeplitz, kinds=KINDS) -> set:
    return set(orbit_with_words(A, kinds))


def sort_key(A: LtToeplitz):
    key = A.field.order_key
    return tuple(key(v) for v in A.values)


def canonical_form(A: LtToeplitz, kinds=KINDS) -> LtToeplitz:
    """Smallest orbit element under the canonical element order, compared entrywise."""
    return min(orbit(A, kinds), key=sort_key)
