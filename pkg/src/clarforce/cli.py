"""Command-line entry point.

Exit codes: 0 success, 2 parse/usage error, 3 no perfect matching,
4 consistency check failed, 5 oracle budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .checks import Budgets, Status, run_checks
from .corpus import corpus
from .decomp import elementary_components
from .errors import BudgetExceeded, ClarForceError, InvariantViolation, NoPerfectMatching, ParseError
from .forcing import DEFAULT_DEPTH, DEFAULT_MATCHING_BUDGET, max_forcing_number
from .planegraph import PlaneBipartiteGraph, parse_hexagonal_text, parse_polyomino
from .render import render_svg
from .report import Timer, build_decomposition_doc, build_report, dumps, lp_dump

EXIT_OK, EXIT_PARSE, EXIT_NO_MATCHING, EXIT_INVARIANT, EXIT_BUDGET = 0, 2, 3, 4, 5
CORPUS_LIMITS = {"poly": 8, "hex": 5}


def _format_of(path: str, fmt: str | None) -> str:
    if fmt:
        return fmt
    return "hex" if Path(path).suffix == ".hex" else "poly"


def load_graph(path: str, fmt: str) -> PlaneBipartiteGraph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return parse_hexagonal_text(text) if fmt == "hex" else parse_polyomino(text)


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _report_text(doc: dict) -> str:
    s = doc["stats"]
    w = doc["witnesses"]
    lines = [
        f"graph: {s['vertices']} vertices, {s['edges']} edges, {s['faces']} faces ({doc['graph']['kind']})",
        f"elementary: {'yes' if doc['elementary'] else 'no'}"
        f" ({len(doc['components'])} component(s), "
        f"{len(doc['fixed_bonds']['fixed_single']) + len(doc['fixed_bonds']['fixed_double'])} fixed bond(s))",
        f"Clar number: {doc['clar_number']} ({doc['certificate']}, LP relaxation {doc['relaxation']})",
        f"maximum forcing number: {doc['F']}",
        f"maximum Clar cover faces: {w['cover']['faces']}",
    ]
    if w["forcing_set"] is not None:
        lines.append(f"forcing set of the Clar matching: {w['forcing_set']}")
    for phase, ms in doc.get("timings_ms", {}).items():
        lines.append(f"time {phase}: {ms} ms")
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    fmt = _format_of(args.path, args.format)
    timer = Timer()
    with timer.phase("parse"):
        g = load_graph(args.path, fmt)
    if args.dump_lp:
        Path(args.dump_lp).write_text(lp_dump(g), encoding="utf-8")
    doc = build_report(g, fmt, timer, max_depth=args.budget_depth, timings=not args.no_timings)
    _emit(dumps(doc) if args.json else _report_text(doc), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    fmt = _format_of(args.path, args.format)
    g = load_graph(args.path, fmt)
    results = run_checks(g, Budgets(args.budget_matchings, args.budget_depth))
    if args.json:
        sys.stdout.write(dumps({"checks": [
            {"name": r.name, "status": r.status.value, "detail": r.detail} for r in results
        ]}))
    else:
        for r in results:
            sys.stdout.write(f"{r.status.value:<8} {r.name}: {r.detail}\n")
    return _checks_exit(results)


def _checks_exit(results) -> int:
    if any(r.status is Status.FAIL for r in results):
        return EXIT_INVARIANT
    if any(r.status is Status.SKIPPED for r in results):
        return EXIT_BUDGET
    return EXIT_OK


def cmd_render(args) -> int:
    fmt = _format_of(args.path, args.format)
    g = load_graph(args.path, fmt)
    fr = max_forcing_number(g)
    Path(args.out).write_text(render_svg(g, fr.cover, fr.decomposition), encoding="utf-8")
    return EXIT_OK


def cmd_decompose(args) -> int:
    fmt = _format_of(args.path, args.format)
    g = load_graph(args.path, fmt)
    doc = build_decomposition_doc(g, elementary_components(g), fmt)
    _emit(dumps(doc), args.output)
    return EXIT_OK


def _corpus_item(item):
    kind, shape, g, budgets, as_json, timings = item
    results = run_checks(g, budgets)
    doc = build_report(g, kind, max_depth=budgets.depth, timings=timings)
    cells = [list(c) for c in shape]
    if as_json:
        line = json.dumps({
            "kind": kind,
            "cells": cells,
            "report": doc,
            "checks": [{"name": r.name, "status": r.status.value, "detail": r.detail} for r in results],
        }, sort_keys=True)
    else:
        verdict = ",".join(sorted({r.status.value for r in results}))
        line = f"{kind} {len(shape)} {cells} C={doc['clar_number']} F={doc['F']} {verdict}"
    return line + "\n", [r.status for r in results]


def cmd_corpus(args) -> int:
    limit = CORPUS_LIMITS[args.kind]
    if args.max_cells > limit and not args.allow_large:
        sys.stderr.write(f"error: --max-cells above {limit} needs --allow-large\n")
        return EXIT_PARSE
    budgets = Budgets(args.budget_matchings, args.budget_depth)
    items = ((args.kind, shape, g, budgets, args.json, not args.no_timings)
             for shape, g in corpus(args.kind, args.max_cells))
    counts = {Status.PASS: 0, Status.FAIL: 0, Status.SKIPPED: 0}
    instances = 0

    def consume(results) -> int:
        nonlocal instances
        for line, statuses in results:
            instances += 1
            sys.stdout.write(line)
            for s in statuses:
                counts[s] += 1
            if Status.FAIL in statuses:
                return EXIT_INVARIANT
        return EXIT_OK

    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            code = consume(pool.map(_corpus_item, items, chunksize=8))
    else:
        code = consume(map(_corpus_item, items))
    summary = {"instances": instances, "passes": counts[Status.PASS],
               "failures": counts[Status.FAIL], "skipped": counts[Status.SKIPPED]}
    if args.json:
        sys.stdout.write(json.dumps({"summary": summary}, sort_keys=True) + "\n")
    else:
        sys.stdout.write(" ".join(f"{k}={v}" for k, v in summary.items()) + "\n")
    if code:
        return code
    return EXIT_BUDGET if counts[Status.SKIPPED] else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["poly", "hex"], help="input lattice (default: by extension, .hex or poly)")
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--no-timings", action="store_true", help="omit timings for byte-stable output")
    common.add_argument("--budget-matchings", type=int, default=DEFAULT_MATCHING_BUDGET, metavar="N",
                        help="cap on enumerated perfect matchings")
    common.add_argument("--budget-depth", type=int, default=DEFAULT_DEPTH, metavar="N",
                        help="cap on forcing-set search depth")

    parser = argparse.ArgumentParser(prog="clarforce", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="Clar number, F and witnesses")
    p.add_argument("path")
    p.add_argument("-o", "--output")
    p.add_argument("--dump-lp", metavar="PATH", help="write the Clar program in CPLEX LP format")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", parents=[common], help="cross-check against brute-force oracles")
    p.add_argument("path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", parents=[common], help="SVG of a maximum Clar cover")
    p.add_argument("path")
    p.add_argument("out")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("decompose", parents=[common], help="elementary components and fixed bonds as JSON")
    p.add_argument("path")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("corpus", parents=[common], help="verify every small fixed shape")
    p.add_argument("--kind", choices=["poly", "hex"], default="poly")
    p.add_argument("--max-cells", type=int, default=4)
    p.add_argument("--allow-large", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PARSE
    except NoPerfectMatching as exc:
        sys.stderr.write(f"error: no perfect matching: {exc}\n")
        return EXIT_NO_MATCHING
    except InvariantViolation as exc:
        sys.stderr.write(f"error: invariant violated: {exc}\n")
        return EXIT_INVARIANT
    except BudgetExceeded as exc:
        sys.stderr.write(f"error: budget exceeded: {exc}\n")
        return EXIT_BUDGET
    except ClarForceError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
