"""Text and JSON file formats.

Every format opens with the field header ``GF p=<p> e=<e> mod=<c0,...,ce>``.

* Toeplitz matrix (.srm): ``col: e0, e1, ..., e_gamma``.
* Dense matrix: ``M r c`` followed by r lines of comma-separated entries.
* Polynomial matrix (.pm): ``P r c`` followed by one ``i j : c0, c1, ...`` line
  per nonzero entry (1-based, constant term first); omitted entries are zero.

Blank lines and ``#`` comments are ignored by the readers.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import FormatError, SrkitError
from .field import FiniteField, GF, parse_header
from .toeplitz import LtToeplitz, ProperIndexPair


def _lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]


def _header(lines) -> FiniteField:
    if not lines:
        raise FormatError("empty input")
    try:
        return parse_header(lines[0])
    except SrkitError as exc:
        raise FormatError(str(exc)) from exc


def _elements(F, text):
    try:
        return [F.parse(t).value for t in text.split(",")]
    except SrkitError as exc:
        raise FormatError(str(exc)) from exc


# -- Toeplitz ---------------------------------------------------------------

def format_toeplitz(A: LtToeplitz) -> str:
    return f"{A.field.header()}\ncol: {', '.join(A.format_col())}\n"


def parse_toeplitz(text: str) -> LtToeplitz:
    text = text.lstrip()
    if text.startswith("{"):
        return toeplitz_from_json(text)
    lines = _lines(text)
    F = _header(lines)
    if len(lines) != 2 or not lines[1].startswith("col:"):
        raise FormatError("expected a single 'col:' line after the header")
    return LtToeplitz(F, _elements(F, lines[1][4:]))


def toeplitz_to_json(A: LtToeplitz) -> str:
    F = A.field
    doc = {"field": {"p": F.p, "e": F.e, "mod": list(F.modulus)}, "col": A.format_col()}
    return json.dumps(doc, sort_keys=True)


def toeplitz_from_json(text: str) -> LtToeplitz:
    try:
        doc = json.loads(text)
        f = doc["field"]
        F = GF(int(f["p"]), int(f["e"]), [int(c) for c in f["mod"]])
        return LtToeplitz(F, [F.parse(str(t)).value for t in doc["col"]])
    except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
        raise FormatError(f"bad matrix JSON: {exc}") from exc


def format_witness(pair: ProperIndexPair) -> str:
    return f"FAIL {pair}"


# -- dense ------------------------------------------------------------------

def format_dense(F: FiniteField, M) -> str:
    out = [F.header(), f"M {len(M)} {len(M[0]) if M else 0}"]
    out += [", ".join(F.format(v) for v in row) for row in M]
    return "\n".join(out) + "\n"


def parse_dense(text: str) -> tuple[FiniteField, list[list[int]]]:
    lines = _lines(text)
    F = _header(lines)
    try:
        tag, r, c = lines[1].split()
        r, c = int(r), int(c)
    except (IndexError, ValueError):
        raise FormatError("expected 'M r c' after the header") from None
    if tag != "M" or len(lines) != 2 + r:
        raise FormatError("dense matrix size line does not match the body")
    rows = [_elements(F, ln) for ln in lines[2:]]
    if any(len(row) != c for row in rows):
        raise FormatError("row length does not match the column count")
    return F, rows


# -- polynomial matrices ----------------------------------------------------

def format_polymatrix(P) -> str:
    F = P.field
    r, c = P.shape
    out = [F.header(), f"P {r} {c}"]
    for i in range(r):
        for j in range(c):
            e = P.entries[i][j]
            if e:
                out.append(f"{i + 1} {j + 1} : {', '.join(F.format(v) for v in e)}")
    return "\n".join(out) + "\n"


def parse_polymatrix(text: str):
    from .codes import PolyMatrix

    lines = _lines(text)
    F = _header(lines)
    try:
        tag, r, c = lines[1].split()
        r, c = int(r), int(c)
    except (IndexError, ValueError):
        raise FormatError("expected 'P r c' after the header") from None
    if tag != "P" or r < 1 or c < 1:
        raise FormatError("bad polynomial matrix size line")
    entries = [[() for _ in range(c)] for _ in range(r)]
    for ln in lines[2:]:
        pos, sep, body = ln.partition(":")
        try:
            i, j = (int(x) for x in pos.split())
        except ValueError:
            raise FormatError(f"bad entry line {ln!r}") from None
        if not sep or not (1 <= i <= r and 1 <= j <= c):
            raise FormatError(f"bad entry line {ln!r}")
        entries[i - 1][j - 1] = tuple(_elements(F, body))
    return PolyMatrix(F, entries)


# -- files ------------------------------------------------------------------

def read_text(path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc


def write_checked(path, text: str, reader) -> None:
    """Write ``text`` only after confirming that ``reader`` re-parses it."""
    reader(text)
    Path(path).write_text(text)
