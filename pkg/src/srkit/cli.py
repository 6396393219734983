"""srkit command line.

Exit codes: 0 success or true, 1 verified false (not superregular, proven
NotFound, not MDP), 2 usage, input or budget errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import __version__
from .actions import KINDS, format_word, orbit_with_words, sort_key
from .bounds import field_size_bound
from .codes import CodeParams, column_distance, column_distance_parity, extract_mdp, mdp_certify, sliding
from .errors import BudgetExceeded, CapExceeded, SrkitError, TimeBudgetExceeded
from .field import GF, prime_power
from .io import (
    format_dense, format_toeplitz, format_witness, parse_dense, parse_polymatrix, parse_toeplitz,
    read_text, write_checked,
)
from .pascal import pascal_min_prime, pascal_mod_p
from .search import SearchConfig, min_field_size, run_search, test_conjecture
from .toeplitz import check_superregular, is_superregular

DEFAULT_BUDGET = 60.0


class Outcome(Exception):
    """Carries a finished result plus its exit code out of a handler."""

    def __init__(self, code, outcome, text, nodes=0):
        super().__init__(code)
        self.code, self.outcome, self.text, self.nodes = code, outcome, text, nodes


def _budget(args):
    if getattr(args, "extended", False):
        return None
    return args.budget


def _threads(args):
    if args.threads:
        return args.threads
    env = os.environ.get("SRKIT_THREADS")
    return int(env) if env else 1


def _write(args, text, reader, outputs):
    if getattr(args, "out", None):
        write_checked(args.out, text, reader)
        outputs.append(args.out)


def _range(text):
    lo, sep, hi = text.partition("..")
    try:
        return list(range(int(lo), int(hi) + 1)) if sep else [int(lo)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None


# -- handlers ---------------------------------------------------------------

def cmd_check(args, outputs):
    A = parse_toeplitz(read_text(args.input))
    ok, wit = check_superregular(A)
    out = {"superregular": ok, "witness": str(wit) if wit else None, "gamma": A.gamma, "q": A.field.q}
    text = "superregular" if ok else f"not superregular\n{format_witness(wit)}"
    return Outcome(0 if ok else 1, out, text)


def cmd_search(args, outputs):
    if not prime_power(args.q):
        raise SrkitError(f"{args.q} is not a prime power")
    F = GF(args.q)
    mode = "count-all" if args.count else "find-first"
    norm = args.normalize or ("none" if args.count else "a0a1")
    cfg = SearchConfig(F, args.gamma, mode, norm, _budget(args), _threads(args), args.engine)
    res = run_search(cfg)
    out = res.record()
    out.pop("seconds")
    if args.count:
        return Outcome(0, out, f"count {res.count}", res.nodes_visited)
    if res.found:
        body = format_toeplitz(res.witness)
        _write(args, body, parse_toeplitz, outputs)
        return Outcome(0, out, body.rstrip("\n"), res.nodes_visited)
    return Outcome(1, out, f"NotFound: no superregular matrix of dimension {args.gamma + 1} over GF({args.q})",
                   res.nodes_visited)


def cmd_minfield(args, outputs):
    try:
        r = min_field_size(args.gamma, args.family, args.cap, budget=_budget(args),
                           threads=_threads(args), engine=args.engine)
    except CapExceeded as exc:
        out = {"gamma": args.gamma, "q": None, "proven_not_found": [q for q, _ in exc.failures]}
        return Outcome(1, out, f"NotFound: none with q <= {args.cap}", sum(n for _, n in exc.failures))
    out = r.record()
    out.pop("seconds")
    out.pop("nodes_visited")
    lines = [f"gamma {r.dim} q {r.q}", f"not found for q in {out['proven_not_found']}", format_toeplitz(r.witness).rstrip()]
    _write(args, format_toeplitz(r.witness), parse_toeplitz, outputs)
    return Outcome(0, out, "\n".join(lines), sum(n for _, n in r.failures))


def cmd_conjecture(args, outputs):
    r = test_conjecture(args.gamma, budget=_budget(args), threads=_threads(args), engine=args.engine)
    nodes = r.pop("nodes_visited")
    r.pop("seconds", None)
    code = {"witness": 0, "refuted-by-exhaustion": 1, "budget-exceeded": 2}[r["status"]]
    text = f"GF({r['q']}) dimension {r['gamma']}: {r['status']}"
    if r["witness"]:
        text += f"\ncol: {', '.join(r['witness'])}"
    return Outcome(code, r, text, nodes)


def cmd_orbit(args, outputs):
    A = parse_toeplitz(read_text(args.input))
    kinds = tuple(args.kinds.split(",")) if args.kinds else KINDS
    words = orbit_with_words(A, kinds)
    F = A.field
    elems = sorted(words, key=sort_key)
    rows = [{"col": B.format_col(), "word": format_word(words[B], F)} for B in elems]
    lines = [F.header()] + [f"col: {', '.join(r['col'])} ; word: {r['word']}" for r in rows]
    all_sr = all(is_superregular(B) for B in elems) if is_superregular(A) else None
    out = {"size": len(rows), "elements": rows, "all_superregular": all_sr}
    return Outcome(0, out, "\n".join(lines + [f"orbit size {len(rows)}"]))


def cmd_bound(args, outputs):
    if args.table:
        reps = [field_size_bound(g) for g in args.table]
        out = {"table": [{"gamma": r.gamma, "bound": r.bound} for r in reps]}
        return Outcome(0, out, "\n".join(f"{r.gamma} {r.bound}" for r in reps))
    if args.gamma is None:
        raise SrkitError("bound needs --gamma or --table")
    r = field_size_bound(args.gamma).as_dict()
    return Outcome(0, r, "\n".join(f"{k} {v}" for k, v in r.items()))


def cmd_construct_mdp(args, outputs):
    T = parse_toeplitz(read_text(args.input))
    params = CodeParams(args.n, args.k, args.delta)
    j = params.L if args.j is None else args.j
    r = extract_mdp(T, params, j, unchecked=args.unchecked)
    body = format_dense(T.field, r.assembled)
    _write(args, body, parse_dense, outputs)
    out = {"n": args.n, "k": args.k, "delta": args.delta, "j": j, "rows": r.rows, "cols": r.cols,
           "max_span": r.max_span, "matrix": [[T.field.format(v) for v in row] for row in r.assembled]}
    return Outcome(0 if r.max_span else 1, out, body.rstrip("\n") + f"\nmax-span {str(r.max_span).lower()}")


def cmd_coldist(args, outputs):
    G = parse_polymatrix(read_text(args.input))
    out = {"j": args.j, "generator_side": None, "parity_side": None}
    try:
        out["generator_side"] = column_distance(G, args.j, args.enum_budget)
    except BudgetExceeded:
        if not args.parity:
            raise
    if args.parity:
        H = parse_polymatrix(read_text(args.parity))
        out["parity_side"] = column_distance_parity(G.field, sliding(H, args.j, "parity"), G.shape[0], args.enum_budget)
    vals = {v for v in (out["generator_side"], out["parity_side"]) if v is not None}
    if len(vals) > 1:
        raise SrkitError(f"generator side and parity side disagree: {out}")
    out["d"] = vals.pop()
    return Outcome(0, out, f"d_{args.j} {out['d']}")


def cmd_certify(args, outputs):
    G = parse_polymatrix(read_text(args.input))
    H = parse_polymatrix(read_text(args.parity)) if args.parity else None
    rep = mdp_certify(G, CodeParams(args.n, args.k, args.delta), H, args.enum_budget)
    lines = [f"{k} {json.dumps(v)}" for k, v in sorted(rep.items())]
    return Outcome(0 if rep["mdp"] else 1, rep, "\n".join(lines))


def cmd_pascal(args, outputs):
    if args.prime is not None:
        T = pascal_mod_p(args.gamma, args.prime)
        ok, wit = check_superregular(T)
        body = format_toeplitz(T)
        _write(args, body, parse_toeplitz, outputs)
        out = {"gamma": args.gamma, "p": args.prime, "col": T.format_col(), "superregular": ok,
               "witness": str(wit) if wit else None}
        text = body.rstrip("\n") + ("\nsuperregular" if ok else f"\nnot superregular\n{format_witness(wit)}")
        return Outcome(0 if ok else 1, out, text)
    try:
        r = pascal_min_prime(args.gamma, args.cap)
    except CapExceeded as exc:
        out = {"gamma": args.gamma, "p": None, "failing_primes": [p for p, _ in exc.failures]}
        return Outcome(1, out, f"NotFound: no prime <= {args.cap}")
    body = format_toeplitz(r.matrix)
    _write(args, body, parse_toeplitz, outputs)
    out = {"gamma": args.gamma, "p": r.p, "col": r.matrix.format_col(), "failing_primes": [p for p, _ in r.failures]}
    return Outcome(0, out, f"p {r.p}\nfailing {out['failing_primes']}\n" + body.rstrip("\n"))


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON run report")
    common.add_argument("--threads", type=int, default=None, help="worker processes (default $SRKIT_THREADS or 1)")

    search = argparse.ArgumentParser(add_help=False)
    search.add_argument("--budget", type=float, default=DEFAULT_BUDGET, help="seconds per search (default 60)")
    search.add_argument("--extended", action="store_true", help="lift the time budget entirely")
    search.add_argument("--engine", choices=("auto", "numba", "python"), default="auto")

    enum = argparse.ArgumentParser(add_help=False)
    enum.add_argument("--enum-budget", type=int, default=2_000_000, help="cap on enumerated words or span tests")

    p = argparse.ArgumentParser(prog="srkit", description="Superregular Toeplitz matrices and MDP codes.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("check", parents=[common], help="test a matrix file for superregularity")
    s.add_argument("--in", dest="input", required=True)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("search", parents=[common, search], help="find or count superregular matrices")
    s.add_argument("--gamma", type=int, required=True, help="matrix dimension minus one")
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--count", action="store_true")
    s.add_argument("--normalize", choices=("none", "a0", "a0a1"))
    s.add_argument("--out")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("minfield", parents=[common, search], help="smallest field with a superregular matrix")
    s.add_argument("--gamma", type=int, required=True, help="matrix dimension")
    s.add_argument("--family", choices=("primes", "prime-powers"), default="primes")
    s.add_argument("--cap", type=int, default=128)
    s.add_argument("--out")
    s.set_defaults(func=cmd_minfield)

    s = sub.add_parser("conjecture", parents=[common, search], help="search GF(2^(gamma-2))")
    s.add_argument("--gamma", type=int, required=True, help="matrix dimension")
    s.set_defaults(func=cmd_conjecture)

    s = sub.add_parser("orbit", parents=[common], help="orbit under the group actions")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--kinds", help=f"comma-separated subset of {','.join(KINDS)}")
    s.set_defaults(func=cmd_orbit)

    s = sub.add_parser("bound", parents=[common], help="sufficient field size N_gamma + 1")
    s.add_argument("--gamma", type=int, help="matrix dimension")
    s.add_argument("--table", type=_range, help="range A..B")
    s.set_defaults(func=cmd_bound)

    s = sub.add_parser("construct-mdp", parents=[common], help="extract [I | T'] from a superregular matrix")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--delta", type=int, required=True)
    s.add_argument("--j", type=int, help="truncation level (default L)")
    s.add_argument("--unchecked", action="store_true", help="skip the superregularity check")
    s.add_argument("--out")
    s.set_defaults(func=cmd_construct_mdp)

    s = sub.add_parser("coldist", parents=[common, enum], help="j-th column distance")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--j", type=int, required=True)
    s.add_argument("--parity", help="parity-check matrix file for the dual computation")
    s.set_defaults(func=cmd_coldist)

    s = sub.add_parser("certify", parents=[common, enum], help="column distance profile and MDP test")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--delta", type=int, required=True)
    s.add_argument("--parity")
    s.set_defaults(func=cmd_certify)

    s = sub.add_parser("pascal", parents=[common], help="binomial matrix reduced mod p")
    s.add_argument("--gamma", type=int, required=True, help="matrix dimension")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--prime", type=int)
    g.add_argument("--min-prime", action="store_true")
    s.add_argument("--cap", type=int, default=10000)
    s.add_argument("--out")
    s.set_defaults(func=cmd_pascal)
    return p


def _inputs(args) -> dict:
    skip = {"func", "json", "cmd"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    outputs: list[str] = []
    t0 = time.monotonic()
    try:
        res = args.func(args, outputs)
    except (TimeBudgetExceeded, BudgetExceeded) as exc:
        res = Outcome(2, {"error": "budget", "message": str(exc)}, f"budget exceeded: {exc}",
                      getattr(exc, "nodes_visited", 0))
    except (SrkitError, ValueError) as exc:
        print(f"srkit: error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        report = {
            "subcommand": args.cmd,
            "inputs": _inputs(args),
            "outcome": res.outcome,
            "exit_code": res.code,
            "outputs": outputs,
            "nodes_visited": res.nodes,
            "wall_seconds": round(time.monotonic() - t0, 3),
            "tool_version": __version__,
            "deterministic": True,
        }
        print(json.dumps(report, sort_keys=True, default=str))
    else:
        print(res.text)
    return res.code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
