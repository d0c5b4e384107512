"""Command line interface: ``rainbow-ren report | verify | survey``.

Exit codes: 0 success or full agreement, 1 usage or parse error, 2 when a
verification sweep contains a disagreement (unless ``--findings-ok``).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Iterator

from .chromatic import chi_minus_colouring, chromatic_number, chromatic_profile
from .closed_forms import format_verify_table, parse_sweep, verify
from .errors import Graph6Error, InvalidSpecError, OrderGuardError
from .families import build, parse_family
from .graph import ENUMERATE_MAX_ORDER, Graph
from .graph6 import parse_graph6, read_graph6_lines, write_graph6
from .jcolor import j_number, j_star_number
from .ren import REN_MAX_ORDER, ren_exact
from .sequences import (
    chromatic_degree_sequence, format_survey_json, format_survey_table, survey, survey_graphs,
)

SCHEMA = 1
STAGES = ("chi", "chi-minus", "j", "j-star", "ren", "profile", "sequence")
# chi-minus, J and J* are exact searches; beyond this order they are skipped
EXACT_MAX_ORDER = 24


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _load_inputs(items: list[str]) -> Iterator[tuple[str, Graph]]:
    for item in items:
        if item == "-":
            for g in read_graph6_lines(sys.stdin):
                yield write_graph6(g), g
        elif item.startswith("@"):
            with open(item[1:]) as fh:
                for g in read_graph6_lines(fh):
                    yield write_graph6(g), g
        elif ":" in item:
            yield item, build(parse_family(item))
        else:
            yield item, parse_graph6(item)


def build_report(desc: str, g: Graph, stages: tuple[str, ...], max_order: int,
                 timings: bool = False, jobs: int = 1) -> dict:
    """The report record for one graph; skipped stages carry a ``skipped`` reason."""
    out: dict = {"schema": SCHEMA, "input": desc, "n": g.n, "m": g.m}
    spent: dict[str, float] = {}
    colouring = None

    def canonical():
        nonlocal colouring
        if colouring is None:
            colouring = chi_minus_colouring(g)
        return colouring

    for stage in STAGES:
        if stage not in stages:
            continue
        start = time.perf_counter()
        limit = max_order if stage == "ren" else EXACT_MAX_ORDER
        if g.n > limit:
            out[stage] = {"skipped": f"order {g.n} exceeds limit {limit}"}
        elif stage == "chi":
            out["chi"] = chromatic_number(g)
        elif stage == "chi-minus":
            c = canonical()
            out["chi-minus"] = {"k": c.k, "classes": [list(cl) for cl in c.classes], "theta": list(c.theta)}
        elif stage in ("j", "j-star"):
            found = (j_number if stage == "j" else j_star_number)(g)
            out[stage] = {"value": found[0], "colouring": list(found[1].colouring.assignment)} if found \
                else {"value": None}
        elif stage == "ren":
            try:
                out["ren"] = ren_exact(g, jobs=jobs, max_order=max_order).as_dict()
            except OrderGuardError as exc:
                out["ren"] = {"skipped": str(exc)}
        elif stage == "profile":
            out["profile"] = chromatic_profile(g, canonical()).as_dict()
        elif stage == "sequence":
            out["sequence"] = list(chromatic_degree_sequence(g))
        spent[stage] = round((time.perf_counter() - start) * 1000, 3)
    if timings:
        out["timings_ms"] = spent
    return out


def _report_task(args) -> dict:
    return build_report(*args)


def _format_report_table(rep: dict) -> str:
    lines = []
    for key, value in rep.items():
        if key == "schema":
            continue
        if isinstance(value, dict):
            lines.append(f"{key}:")
            lines += [f"  {k}: {json.dumps(v)}" for k, v in value.items()]
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines)


def cmd_report(args) -> int:
    stages = tuple(STAGES)
    if args.only:
        stages = tuple(s.strip() for s in args.only.split(",") if s.strip())
        bad = [s for s in stages if s not in STAGES]
        if bad:
            print(f"error: unknown --only stage(s) {bad}; choose from {list(STAGES)}", file=sys.stderr)
            return 1
    try:
        inputs = list(_load_inputs(args.inputs))
    except (Graph6Error, InvalidSpecError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    if args.jobs > 1 and len(inputs) > 1:
        tasks = [(d, g, stages, args.max_order, args.timings, 1) for d, g in inputs]
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_report_task, tasks))
    else:
        reports = [build_report(d, g, stages, args.max_order, args.timings, args.jobs) for d, g in inputs]

    if args.format == "json":
        print("\n".join(json.dumps(r) for r in reports))
    else:
        print("\n\n".join(_format_report_table(r) for r in reports))
    return 0


def cmd_verify(args) -> int:
    try:
        quantities = [q.strip() for item in args.quantity or [] for q in item.split(",") if q.strip()]
        sweep = parse_sweep(args.sweep, quantities or None)
    except InvalidSpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    rows = verify(sweep, jobs=args.jobs)
    if args.format == "json":
        for r in rows:
            print(json.dumps({"schema": SCHEMA, **r.as_dict()}))
    else:
        print(format_verify_table(rows))
    if any(r.flagged for r in rows) and not args.findings_ok:
        return 2
    return 0


def cmd_survey(args) -> int:
    if args.input:
        try:
            with open(args.input) as fh:
                graphs = list(read_graph6_lines(fh))
        except (Graph6Error, OSError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        too_big = [write_graph6(g) for g in graphs if g.n > args.max_order]
        if too_big:
            print(f"error: {len(too_big)} graph(s) exceed --max-order {args.max_order}", file=sys.stderr)
            return 1
        rows = survey_graphs(graphs, jobs=args.jobs)
    else:
        if args.n is None or not 1 <= args.n <= ENUMERATE_MAX_ORDER:
            print(f"error: survey order must be 1..{ENUMERATE_MAX_ORDER} (or pass --input FILE)",
                  file=sys.stderr)
            return 1
        rows = survey(args.n, args.connected, jobs=args.jobs)
    print(format_survey_json(rows) if args.format == "json" else format_survey_table(rows))
    return 0


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rainbow-ren", description="J-colourings and the rainbow neighbourhood equate number.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, fmt_default):
        p.add_argument("--jobs", type=int, default=os.cpu_count() or 1, help="worker processes")
        p.add_argument("--format", choices=("json", "table"), default=fmt_default)

    p = sub.add_parser("report", help="per-graph report")
    p.add_argument("inputs", nargs="+", help="graph6 string, family spec (e.g. cycle:5), @file.g6 or -")
    p.add_argument("--only", help=f"comma-separated subset of {','.join(STAGES)}")
    p.add_argument("--max-order", type=int, default=REN_MAX_ORDER, help="largest order for exact ren")
    p.add_argument("--timings", action="store_true", help="add per-stage timings in ms")
    common(p, "json")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("verify", help="compare closed forms with exact solvers")
    p.add_argument("sweep", nargs="+", help="e.g. 'cycles 3..12', 'jahangir n=1 m=3..6', 'join cycle:5 cycle:5'")
    p.add_argument("--quantity", action="append", help="J, J*, ren or chromatic-diameter (repeatable or comma-separated)")
    p.add_argument("--findings-ok", action="store_true", help="exit 0 even when rows disagree")
    common(p, "table")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("survey", help="survey all graphs of a given order")
    p.add_argument("n", type=int, nargs="?", help=f"order 1..{ENUMERATE_MAX_ORDER}")
    p.add_argument("--connected", action="store_true")
    p.add_argument("--input", help="graph6 file to survey instead of enumerating")
    p.add_argument("--max-order", type=int, default=REN_MAX_ORDER)
    common(p, "table")
    p.set_defaults(func=cmd_survey)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
