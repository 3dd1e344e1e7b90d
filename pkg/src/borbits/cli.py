"""Command-line front end: ``borbits <subcommand> ...``.

Exit codes: 0 success, 1 invalid input, 2 a verification suite failed.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from . import covers as cv
from . import tableaux as tb
from .config import GuardError, check_guard
from .ideals import ideal_generators
from .involutions import (
    Involution,
    enumerate_involutions,
    matrix_of,
    orbit_dimension,
    r_values,
)
from .linalg import centralizer_dimension
from .oracle import SUITES, run_suites
from .polynomials import serialize
from .rank import rank_matrix


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit with status 2
        raise UsageError(message)


def _sigma(args) -> Involution:
    try:
        return Involution.parse(args.sigma, args.n)
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        raise UsageError(f"bad involution {args.sigma!r}: {exc}") from exc


def _tableau(text: str) -> tb.TwoColumnTableau:
    try:
        return tb.TwoColumnTableau.parse(text)
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        raise UsageError(str(exc)) from exc


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _dump(obj, out: TextIO) -> None:
    out.write(json.dumps(obj, indent=2, sort_keys=False) + "\n")


def _matrix_text(rows) -> str:
    cells = [[str(x) for x in row] for row in rows]
    w = max((len(c) for row in cells for c in row), default=1)
    return "\n".join(" ".join(c.rjust(w) for c in row) for row in cells)


def cmd_enumerate(args, out: TextIO) -> int:
    check_guard(args.n_size)
    invs = enumerate_involutions(args.n_size)
    if args.count:
        out.write(json.dumps(len(invs)) + "\n" if args.format == "json" else f"{len(invs)}\n")
    elif args.format == "json":
        _dump([s.to_json() for s in invs], out)
    else:
        out.writelines(f"{s}\n" for s in invs)
    return 0


def cmd_rank(args, out: TextIO) -> int:
    sigma = _sigma(args)
    R = rank_matrix(sigma)
    if args.format == "json":
        _dump({"sigma": sigma.to_json(), "rank_matrix": R.tolist()}, out)
    else:
        out.write(_matrix_text(R.tolist()) + "\n")
    return 0


def cmd_dim(args, out: TextIO) -> int:
    sigma = _sigma(args)
    dim = orbit_dimension(sigma)
    payload = {"sigma": str(sigma), "n": sigma.n, "dim": dim, "r_values": r_values(sigma)}
    if args.oracle:
        n = sigma.n
        payload["oracle_dim"] = n * (n + 1) // 2 - centralizer_dimension(matrix_of(sigma))
    if args.format == "json":
        _dump(payload, out)
    else:
        out.write(f"dim {dim}\n")
        out.write("r " + (",".join(map(str, payload["r_values"])) or "-") + "\n")
        if args.oracle:
            out.write(f"oracle {payload['oracle_dim']}\n")
    if args.oracle and payload["oracle_dim"] != dim:
        return 2
    return 0


def cmd_covers(args, out: TextIO) -> int:
    sigma = _sigma(args)
    moves = cv.cover_moves(sigma)
    if args.format == "json":
        _dump({"sigma": sigma.to_json(), "moves": [mv.to_json() for mv in moves]}, out)
    else:
        for mv in moves:
            data = " ".join(f"{k}={v}" for k, v in mv.data.items())
            out.write(f"{mv.kind:<5} {mv.target}  {data}\n")
    return 0


def cmd_closure(args, out: TextIO) -> int:
    sigma = _sigma(args)
    members = sorted(cv.closure(sigma), key=lambda s: (s.length, s.cycles))
    if args.format == "json":
        _dump({"sigma": sigma.to_json(), "closure": [s.to_json() for s in members]}, out)
    else:
        out.writelines(f"{s}\n" for s in members)
    return 0


def cmd_hasse(args, out: TextIO) -> int:
    g = cv.hasse_diagram(args.n_size)
    fmt = "dot" if args.dot else args.format
    if fmt == "dot":
        out.write(cv.hasse_to_dot(g))
    elif fmt == "json":
        _dump(cv.hasse_to_json(g), out)
    else:
        data = cv.hasse_to_json(g)
        for e in data["edges"]:
            out.write(f"{e['source']} -> {e['target']}  {','.join(e['kinds'])}\n")
    return 0


def cmd_ideal(args, out: TextIO) -> int:
    sigma = _sigma(args)
    gs = ideal_generators(sigma, args.mode)
    if args.format == "json":
        _dump(gs.to_json(), out)
    else:
        out.write(f"# sigma={sigma} n={sigma.n} mode={args.mode}\n")
        out.writelines(f"{serialize(g)}\n" for g in gs.all())
    return 0


def cmd_tableau(args, out: TextIO) -> int:
    T = _tableau(args.tableau)
    if args.action == "sigma":
        sigma = tb.involution_of_tableau(T)
        if args.format == "json":
            _dump(sigma.to_json(), out)
        else:
            out.write(f"{sigma}\n")
        return 0
    if args.action == "covers":
        result = tb.tableau_covers(T)
    else:
        check_guard(T.n)
        result = tb.orbital_closure(T)
    ordered = sorted(result, key=lambda t: (len(t.col2), t.col2))
    if args.format == "json":
        _dump([t.to_json() for t in ordered], out)
    else:
        out.write("\n\n".join(str(t) for t in ordered) + ("\n" if ordered else ""))
    return 0


def cmd_verify(args, out: TextIO) -> int:
    check_guard(args.max_n)
    report = run_suites(args.suite, args.max_n, args.seed)
    if args.format == "json":
        _dump(report, out)
    else:
        for c in report["checks"]:
            params = " ".join(f"{k}={v}" for k, v in c["params"].items())
            out.write(f"{'PASS' if c['passed'] else 'FAIL'} {c['suite']}/{c['name']} {params}\n")
    return 0 if report["passed"] else 2


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="borbits", description="B-orbits of square-zero upper-triangular matrices")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(sp, choices=("text", "json")):
        sp.add_argument("--format", choices=choices, default="text")

    def with_sigma(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("sigma", help='involution, e.g. "(1,7)(2,3)(4,6)", "id" or JSON')
        sp.add_argument("--n", type=_positive, default=None, help="ambient size (default: largest letter)")
        fmt(sp)
        return sp

    sp = sub.add_parser("enumerate", help="list the involutions of S_n")
    sp.add_argument("n_size", metavar="n", type=_positive)
    sp.add_argument("--count", action="store_true")
    fmt(sp)
    sp.set_defaults(func=cmd_enumerate)

    with_sigma("rank", "rank matrix").set_defaults(func=cmd_rank)
    sp = with_sigma("dim", "orbit dimension and r-values")
    sp.add_argument("--oracle", action="store_true", help="also compute via the centralizer")
    sp.set_defaults(func=cmd_dim)
    with_sigma("covers", "lower cover moves").set_defaults(func=cmd_covers)
    with_sigma("closure", "all orbits in the closure").set_defaults(func=cmd_closure)

    sp = sub.add_parser("hasse", help="cover graph of S_n^2")
    sp.add_argument("n_size", metavar="n", type=_positive)
    sp.add_argument("--dot", action="store_true")
    fmt(sp, ("text", "json", "dot"))
    sp.set_defaults(func=cmd_hasse)

    sp = with_sigma("ideal", "generators of the defining ideal")
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--full", dest="mode", action="store_const", const="full")
    mode.add_argument("--pruned", dest="mode", action="store_const", const="pruned")
    sp.set_defaults(func=cmd_ideal, mode="pruned")

    sp = sub.add_parser("tableau", help="two-column tableau operations")
    sp.add_argument("action", choices=("sigma", "covers", "closure"))
    sp.add_argument("tableau", help='"1,2,3,6/4,5,7,8" or {"col1": [...], "col2": [...]}')
    fmt(sp)
    sp.set_defaults(func=cmd_tableau)

    sp = sub.add_parser("verify", help="run verification suites")
    sp.add_argument("--suite", action="append", required=True, choices=sorted(SUITES) + ["all"])
    sp.add_argument("--max-n", type=_positive, required=True)
    sp.add_argument("--seed", type=int, default=0)
    fmt(sp)
    sp.set_defaults(func=cmd_verify)
    return p


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except (UsageError, GuardError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return 1


def main(argv: Sequence[str] | None = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
