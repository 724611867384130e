"""``longholes`` command line: solve, shortest-hole, gen, verify, convert.

Exit codes: 0 ok, 1 bad input, 2 verification failure, 3 precondition
violated (an induced C4 in long-holes mode).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .engine import HOLES, LONG_HOLES, EPOutcome, InducedC4Error, solve, verify_outcome
from .generators import FAMILIES, generate
from .graph import Graph, GraphFormatError, from_json, parse_edge_list, to_edge_list, to_json
from .holes import shortest_hole
from .profile import parse_profile

EXIT_OK, EXIT_INPUT, EXIT_VERIFY, EXIT_PRECONDITION = 0, 1, 2, 3


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """Usage errors are input errors (exit 1), not verification failures."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _read_text(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(path: str, fmt: str | None) -> Graph:
    text = _read_text(path)
    if fmt is None:
        fmt = "json" if text.lstrip().startswith("{") else "edgelist"
    try:
        return from_json(text) if fmt == "json" else parse_edge_list(text)
    except (GraphFormatError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _emit(text: str, output: str | None) -> None:
    if output is None or output == "-":
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)


def _positive(text: str) -> int:
    val = int(text)
    if val < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return val


def _profile(text: str):
    try:
        return parse_profile(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def cmd_solve(args) -> int:
    g = _load_graph(args.input, args.format)
    try:
        out = solve(g, args.k, args.mode, args.profile, args.jobs)
    except InducedC4Error as exc:
        _emit(json.dumps({"error": "precondition", "reason": "induced C4", "c4": list(exc.c4)}) + "\n", args.output)
        return EXIT_PRECONDITION
    out.report["seed"] = args.seed
    _emit(out.to_json(), args.output)
    return EXIT_OK if out.report["verification"]["ok"] else EXIT_VERIFY


def cmd_shortest_hole(args) -> int:
    g = _load_graph(args.input, args.format)
    hole = shortest_hole(g, args.min_len)
    body = None if hole is None else {"length": len(hole), "hole": list(hole.verts)}
    _emit(json.dumps(body) + "\n", args.output)
    return EXIT_OK


def cmd_gen(args) -> int:
    params = {}
    for name in ("n", "p", "count", "length", "cycle_len"):
        val = getattr(args, name)
        if val is not None:
            params[name] = val
    try:
        g = generate(args.family, args.seed, **params)
    except (TypeError, ValueError, RuntimeError) as exc:
        raise InputError(str(exc)) from None
    _emit(to_json(g) + "\n" if args.format == "json" else to_edge_list(g), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load_graph(args.input, args.format)
    try:
        obj = json.loads(_read_text(args.outcome))
        out = EPOutcome.from_json_obj(obj)
    except (json.JSONDecodeError, ValueError, KeyError) as exc:
        raise InputError(f"{args.outcome}: bad outcome file: {exc}") from None
    k = args.k if args.k is not None else obj.get("report", {}).get("k", len(out.holes or []) or 1)
    rep = verify_outcome(g, k, out)
    _emit(json.dumps(rep, indent=2) + "\n", args.output)
    return EXIT_OK if rep["ok"] else EXIT_VERIFY


def cmd_convert(args) -> int:
    g = _load_graph(args.input, None)
    _emit(to_json(g) + "\n" if args.format == "json" else to_edge_list(g), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="longholes", description="Pack or hit long holes with checkable certificates.")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_input(p, fmt_help="input graph format (default: detect)"):
        p.add_argument("input", help="graph file, or - for stdin")
        p.add_argument("--format", choices=("edgelist", "json"), default=None, help=fmt_help)
        p.add_argument("-o", "--output", help="write here instead of stdout")

    p = sub.add_parser("solve", help="k disjoint holes or a hitting set")
    graph_input(p)
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--mode", choices=(HOLES, LONG_HOLES), default=LONG_HOLES)
    p.add_argument("--profile", type=_profile, default=parse_profile("paper"), help="paper, toy:D, toy:D:B or budget:N")
    p.add_argument("--seed", type=int, default=0, help="recorded in the report; the solver itself is deterministic")
    p.add_argument("--jobs", type=_positive, default=1, help="worker processes for the hole search")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("shortest-hole", help="a shortest hole of at least --min-len vertices")
    graph_input(p)
    p.add_argument("--min-len", type=int, choices=(4, 5, 6), default=6)
    p.set_defaults(func=cmd_shortest_hole)

    p = sub.add_parser("gen", help="generate a seeded instance")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--count", type=int)
    p.add_argument("--length", type=int)
    p.add_argument("--cycle-len", dest="cycle_len", type=int)
    p.add_argument("--format", choices=("edgelist", "json"), default="edgelist")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="re-check an outcome against its graph")
    graph_input(p)
    p.add_argument("outcome", help="outcome JSON written by solve")
    p.add_argument("--k", type=_positive, default=None, help="default: the k recorded in the outcome")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("convert", help="rewrite a graph as edge list or JSON")
    p.add_argument("input")
    p.add_argument("--format", choices=("edgelist", "json"), default="json", help="output format")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_convert)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
