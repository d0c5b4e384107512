"""Chromatic degree sequences and the small-graph survey of ren against r_chi."""

from __future__ import annotations

import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Iterable, Sequence

from .chromatic import all_chi_colourings, chi_minus_colouring, chromatic_degrees, chromatic_profile
from .errors import OrderGuardError
from .graph import ENUMERATE_MAX_ORDER, Graph, canonical_form, enumerate_graphs
from .graph6 import write_graph6
from .jcolor import j_number
from .ren import ren_exact


def chromatic_degree_sequence(g: Graph) -> tuple[int, ...]:
    """Chromatic degrees under the canonical chromatic colouring, largest first."""
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    return tuple(sorted(chromatic_degrees(g, chi_minus_colouring(g)), reverse=True))


def _realises(g: Graph, target: tuple[int, ...], any_colouring: bool) -> bool:
    if not any_colouring:
        return chromatic_degree_sequence(g) == target
    return any(
        tuple(sorted(chromatic_degrees(g, c), reverse=True)) == target
        for c in all_chi_colourings(g)
    )


def is_chromatically_graphic(
    seq: Sequence[int], connected_only: bool = False, any_colouring: bool = False
) -> Graph | None:
    """First graph (in canonical order) whose chromatic degree sequence is ``seq``.

    By default the canonical chromatic colouring decides; with
    ``any_colouring=True`` a graph qualifies when some chi(G)-colouring of it
    realises the sequence.
    """
    target = tuple(sorted(seq, reverse=True))
    n = len(target)
    if not 1 <= n <= ENUMERATE_MAX_ORDER:
        raise OrderGuardError(f"sequence length must be 1..{ENUMERATE_MAX_ORDER}, got {n}")
    if any(d < 1 for d in target):
        return None
    for g in enumerate_graphs(n, connected_only):
        if _realises(g, target, any_colouring):
            return g
    return None


@dataclass(frozen=True)
class SurveyRow:
    canonical_form: str
    graph6: str
    n: int
    m: int
    chi: int
    j: int | None
    ren: int
    r_chi: int
    min_chromatic_degree: int
    max_chromatic_degree: int
    chromatic_diameter: int
    chromatic_null: bool

    def as_dict(self) -> dict:
        return asdict(self)


def survey_row(g: Graph) -> SurveyRow:
    colouring = chi_minus_colouring(g)
    prof = chromatic_profile(g, colouring)
    found = j_number(g)
    return SurveyRow(
        canonical_form=canonical_form(g),
        graph6=write_graph6(g),
        n=g.n,
        m=g.m,
        chi=colouring.k,
        j=found[0] if found else None,
        ren=ren_exact(g).ren,
        r_chi=prof.r_chi,
        min_chromatic_degree=prof.min_chromatic_degree,
        max_chromatic_degree=prof.max_chromatic_degree,
        chromatic_diameter=prof.chromatic_diameter,
        chromatic_null=prof.chromatic_null,
    )


def survey_graphs(graphs: Iterable[Graph], jobs: int = 1) -> list[SurveyRow]:
    """Rows for arbitrary graphs (e.g. from a graph6 file), sorted by (n, canonical form)."""
    graphs = list(graphs)
    if jobs > 1 and len(graphs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(survey_row, graphs, chunksize=8))
    else:
        rows = [survey_row(g) for g in graphs]
    return sorted(rows, key=lambda r: (r.n, r.canonical_form))


def survey(n: int, connected_only: bool = False, jobs: int = 1) -> list[SurveyRow]:
    """One row per isomorphism class of order ``n``."""
    return survey_graphs(enumerate_graphs(n, connected_only), jobs)


def survey_summary(rows: list[SurveyRow]) -> dict:
    """Joint distribution of (n, ren, r_chi) plus rows that break expected patterns.

    ``null_findings`` lists J-colourable graphs whose canonical chromatic colouring
    is not chromatic-null; ``rainbow_mismatches`` lists rows where
    ``r_chi == n`` and ``chromatic_diameter == 0`` disagree (expected empty).
    """
    joint = Counter((r.n, r.ren, r.r_chi) for r in rows)
    return {
        "rows": len(rows),
        "joint": [
            {"n": n, "ren": ren, "r_chi": rc, "count": count}
            for (n, ren, rc), count in sorted(joint.items())
        ],
        "null_findings": [r.graph6 for r in rows if r.ren == 0 and not r.chromatic_null],
        "rainbow_mismatches": [
            r.graph6 for r in rows if (r.r_chi == r.n) != (r.chromatic_diameter == 0)
        ],
    }


_TABLE_COLUMNS = (
    ("graph6", "graph6"), ("n", "n"), ("m", "m"), ("chi", "chi"), ("J", "j"), ("ren", "ren"),
    ("r_chi", "r_chi"), ("min_dchi", "min_chromatic_degree"), ("max_dchi", "max_chromatic_degree"),
    ("diam", "chromatic_diameter"), ("null", "chromatic_null"),
)


def format_survey_json(rows: list[SurveyRow]) -> str:
    lines = [json.dumps({"schema": 1, **r.as_dict()}) for r in rows]
    lines.append(json.dumps({"schema": 1, "summary": survey_summary(rows)}))
    return "\n".join(lines)


def format_survey_table(rows: list[SurveyRow]) -> str:
    def cell(value) -> str:
        if value is None:
            return "-"
        if isinstance(value, bool):
            return "yes" if value else "no"
        return str(value)

    header = [name for name, _ in _TABLE_COLUMNS]
    body = [[cell(getattr(r, attr)) for _, attr in _TABLE_COLUMNS] for r in rows]
    widths = [max(len(line[i]) for line in [header] + body) for i in range(len(header))]
    out = ["  ".join(c.rjust(w) for c, w in zip(line, widths)) for line in [header] + body]
    summary = survey_summary(rows)
    out.append(f"# {summary['rows']} graphs")
    out.append("# (n, ren, r_chi): count")
    for entry in summary["joint"]:
        out.append(f"#   ({entry['n']}, {entry['ren']}, {entry['r_chi']}): {entry['count']}")
    out.append(f"# J-colourable but not chromatic-null: {len(summary['null_findings'])}")
    for g6 in summary["null_findings"]:
        out.append(f"#   {g6}")
    return "\n".join(out)
