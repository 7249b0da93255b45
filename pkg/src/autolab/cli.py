"""Command-line front end: ``autolab analyze | gen | search | oracle | export-dot``.

Exit codes: 0 ok, 1 search findings present, 2 input error, 3 internal
invariant violation.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import oracles
from .automaton import Automaton, ParseError, format_automaton, parse_automaton, to_dot
from .families import FAMILIES, generate
from .report import InconsistentReport, analyze, to_text
from .search import DEFAULT_SPACE, PREDICATES, SearchGuardError, SearchTask, run_search

EXIT_OK = 0
EXIT_FINDINGS = 1
EXIT_INPUT = 2
EXIT_INVARIANT = 3


class InputError(Exception):
    pass


def _read_automaton(path: str) -> Automaton:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"{path}: {e.strerror or e}") from e
    try:
        return parse_automaton(text)
    except ParseError as e:
        raise InputError(f"{path}: {e}") from e


def cmd_analyze(args) -> int:
    aut = _read_automaton(args.file)
    report = analyze(aut, reset_search=not args.no_reset_bfs, max_monoid=args.max_monoid)
    sys.stdout.write(report.to_json() if args.json else to_text(report))
    return EXIT_OK


def cmd_gen(args) -> int:
    try:
        aut = generate(args.family, args.n)
    except ValueError as e:
        raise InputError(str(e)) from e
    text = format_automaton(aut, comment=f"{args.family} n={args.n}")
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_search(args) -> int:
    try:
        task = SearchTask(
            pred=args.pred, n=args.n, k=args.k, mode=args.mode, count=args.count or 0,
            seed=args.seed, slack=args.slack, space=args.space, force=args.force,
        )
    except SearchGuardError as e:
        raise InputError(str(e)) from e

    out_dir = Path(args.out) if args.out else None
    stream = None
    if out_dir:
        out_dir.mkdir(parents=True, exist_ok=True)
        stream = open(out_dir / "findings.jsonl", "w", encoding="utf-8")

    def emit(finding):
        rows = " / ".join(" ".join(str(t + 1) for t in row) for row in finding.table)
        print(f"finding #{finding.index}: {rows}")
        if stream:
            stream.write(json.dumps(finding.to_json(), separators=(",", ":")) + "\n")

    try:
        result = run_search(task, on_finding=emit, jobs=args.jobs)
    finally:
        if stream:
            stream.close()
    summary = json.dumps(result.summary(), indent=2) + "\n"
    if out_dir:
        (out_dir / "summary.json").write_text(summary, encoding="utf-8")
    sys.stdout.write(summary)
    if result.findings and task.pred == "simple-neq-weakly-contracting":
        print("error: simple and weakly contracting disagree on a circular automaton", file=sys.stderr)
        return EXIT_INVARIANT
    return EXIT_FINDINGS if result.findings else EXIT_OK


def cmd_oracle(args) -> int:
    name, rest = args.name, args.args
    if name not in oracles.ORACLES:
        raise InputError(f"unknown oracle {name!r}; choose from {', '.join(oracles.ORACLES)}")
    if name == "circulant-rank-elim":
        if len(rest) != 1:
            raise InputError("circulant-rank-elim takes one argument, e.g. \"1,-1,1\"")
        try:
            value = oracles.circulant_rank_elim(oracles.parse_vector(rest[0]))
        except (ValueError, ZeroDivisionError) as e:
            raise InputError(str(e)) from e
    elif name == "congruence-closure":
        if len(rest) != 3:
            raise InputError("congruence-closure takes a file and two 1-based states")
        aut = _read_automaton(rest[0])
        try:
            p, q = int(rest[1]) - 1, int(rest[2]) - 1
        except ValueError as e:
            raise InputError("states must be integers") from e
        if not (0 <= p < aut.n and 0 <= q < aut.n):
            raise InputError(f"states must lie in 1..{aut.n}")
        value = json.dumps([[x + 1 for x in b] for b in oracles.congruence_closure(aut, p, q)])
    else:
        if len(rest) != 1:
            raise InputError(f"{name} takes one .aut file")
        aut = _read_automaton(rest[0])
        value = oracles.reset_bfs(aut) if name == "reset-bfs" else oracles.monoid_size(aut)
        if value is None:
            value = "none"
    print(value)
    return EXIT_OK


def cmd_export_dot(args) -> int:
    sys.stdout.write(to_dot(_read_automaton(args.file)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="autolab", description="Exact analysis of circular synchronizing automata.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full property report for an .aut file ('-' reads stdin)")
    p.add_argument("file")
    p.add_argument("--json", action="store_true", help="emit the JSON report")
    p.add_argument("--max-monoid", type=int, default=None, metavar="N",
                   help="also enumerate the transition monoid, up to N elements")
    p.add_argument("--no-reset-bfs", action="store_true", help="skip the shortest reset word search")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("gen", help="write a family automaton")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("n", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("search", help="exhaustive or seeded random search for predicate findings")
    p.add_argument("--pred", required=True, choices=PREDICATES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", required=True, choices=("exhaustive", "random"))
    p.add_argument("--count", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--slack", type=int, default=0)
    p.add_argument("--out", help="directory for findings.jsonl and summary.json")
    p.add_argument("--space", choices=("circular", "general"),
                   help="search space; default per predicate: "
                   + ", ".join(f"{k}={v}" for k, v in DEFAULT_SPACE.items()))
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--force", action="store_true", help="lift the exhaustive size guard")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("oracle", help="run an independent reference computation")
    p.add_argument("name", help=", ".join(oracles.ORACLES))
    p.add_argument("args", nargs="*")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("export-dot", help="Graphviz rendering of an .aut file")
    p.add_argument("file")
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except InconsistentReport as e:
        print(f"internal invariant violation: {e}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
