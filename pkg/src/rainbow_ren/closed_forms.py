"""Closed-form predictions for J, J*, ren and chromatic diameter, and a harness
that compares them with the exact solvers.

Predictions only fire when the hypotheses of the underlying result can be
checked on the concrete graph; otherwise they come back as ``NOT_APPLICABLE``.
Disagreements are reported, never raised.
"""

from __future__ import annotations

import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Union

from . import families as fam
from .chromatic import chi_minus_colouring, chromatic_number, chromatic_profile
from .errors import InvalidSpecError, OrderGuardError
from .families import FamilySpec, build
from .graph import induced_subgraph
from .jcolor import is_j_colourable, j_number, j_star_number
from .ren import ren_exact

NOT_J = "not-J-colourable"
NOT_APPLICABLE = "not-applicable"

QUANTITIES = ("J", "J*", "ren", "chromatic-diameter")

Value = Union[int, str]


@dataclass(frozen=True)
class Prediction:
    quantity: str
    target: FamilySpec
    predicted: Value
    source: str

    @property
    def applicable(self) -> bool:
        return self.predicted != NOT_APPLICABLE


def _na(quantity: str, spec: FamilySpec, why: str) -> Prediction:
    return Prediction(quantity, spec, NOT_APPLICABLE, why)


def _cycle_value(n: int, two: int, three: int) -> Value:
    if n % 3 == 0:
        return three
    if n % 2 == 0:
        return two
    return NOT_J


def predict_j(spec: FamilySpec) -> Prediction:
    kind, p = spec.kind, spec.params
    if kind == "path":
        if p[0] >= 3:
            return Prediction("J", spec, 2, "path: J = 2")
        return _na("J", spec, "path formula needs n >= 3")
    if kind == "cycle":
        return Prediction("J", spec, _cycle_value(p[0], 2, 3), "cycle: 2 if n even, 3 if 3 | n")
    if kind == "wheel":
        return Prediction("J", spec, _cycle_value(p[0], 3, 4), "wheel: 3 if rim even, 4 if 3 | rim")
    if kind == "fan":
        if p[0] >= 3:
            return Prediction("J", spec, 3, "fan: J = 3")
        return _na("J", spec, "fan formula needs a path of order >= 3")
    if kind == "complete":
        return Prediction("J", spec, p[0], "complete graph: one colour per vertex")
    if kind == "mycielskian":
        return Prediction("J", spec, NOT_J, "Mycielskian never has a J-colouring")
    return _na("J", spec, f"no J formula for {kind}")


def predict_j_star(spec: FamilySpec) -> Prediction:
    if spec.kind == "path" and spec.params[0] >= 3:
        return Prediction("J*", spec, 3, "path: J* = 3")
    return _na("J*", spec, f"no J* formula for {spec}")


def predict_ren(spec: FamilySpec) -> Prediction:
    kind, p = spec.kind, spec.params
    if kind == "path":
        return Prediction("ren", spec, 0, "paths are J-colourable")
    if kind == "cycle":
        n = p[0]
        return Prediction("ren", spec, int(n % 2 != 0 and n % 3 != 0), "cycle: 1 unless n even or 3 | n")
    if kind == "wheel":
        n = p[0]
        return Prediction("ren", spec, int(n % 2 != 0 and n % 3 != 0), "wheel: 1 unless rim even or 3 | rim")
    if kind == "mycielskian":
        if is_j_colourable(build(spec.operands[0])):
            return Prediction("ren", spec, 1, "Mycielskian of a J-colourable graph: ren = 1")
        return _na("ren", spec, "inner graph is not J-colourable")
    if kind == "jahangir":
        n, m = p
        if is_j_colourable(build(spec)):
            return Prediction("ren", spec, 0, "J-colourable graph: ren = 0")
        if is_j_colourable(fam.cycle_graph(n * m)):
            return Prediction("ren", spec, 1, "Jahangir: 1 when C_nm is J-colourable")
        return Prediction("ren", spec, 2, "Jahangir: 2 when C_nm is not J-colourable")
    if kind == "join":
        a, b = (predict_ren(op) for op in spec.operands)
        if a.applicable and b.applicable:
            return Prediction("ren", spec, a.predicted + b.predicted, "join: ren(G+H) = ren(G) + ren(H)")
        return _na("ren", spec, "an operand of the join has no ren prediction")
    if kind == "corona":
        return predict_corona_ren(*spec.operands)
    return _na("ren", spec, f"no ren formula for {kind}")


@dataclass(frozen=True)
class CoronaParameters:
    """Everything the corona formulas need, computed from the concrete graphs."""

    n: int
    m: int
    k: int
    ell: int
    theta_g: tuple[int, ...]
    diameter_h: int
    ren_h: int
    chi_h_reduced: int
    case: int | None  # 1..4 in the order: null & wide, null & narrow, ren & wide, ren & narrow

    def theta_tail(self, start: int) -> int:
        """Sum of theta(c_i) for i = start..k (1-based colours of G)."""
        return sum(self.theta_g[max(start, 1) - 1:self.k])


def corona_parameters(g_spec: FamilySpec, h_spec: FamilySpec) -> CoronaParameters:
    g, h = build(g_spec), build(h_spec)
    k, ell = chromatic_number(g), chromatic_number(h)
    theta_g = chi_minus_colouring(g).theta
    diameter_h = chromatic_profile(h, chi_minus_colouring(h)).chromatic_diameter
    res = ren_exact(h)
    reduced, _ = induced_subgraph(h, res.removed)
    chi_reduced = chromatic_number(reduced)

    case = None
    if g.n >= 2 and h.n >= 2:
        if diameter_h == 0:
            case = 1 if ell >= k - 1 else 2
        elif res.ren >= 1:
            case = 3 if chi_reduced >= k - 1 else 4
    return CoronaParameters(g.n, h.n, k, ell, theta_g, diameter_h, res.ren, chi_reduced, case)


def predict_corona_ren(g_spec: FamilySpec, h_spec: FamilySpec) -> Prediction:
    spec = fam.corona(g_spec, h_spec)
    try:
        cp = corona_parameters(g_spec, h_spec)
    except OrderGuardError as exc:
        return _na("ren", spec, str(exc))
    if cp.case == 1:
        return Prediction("ren", spec, 0, "corona, H chromatic-null, chi(H) >= chi(G)-1")
    if cp.case == 2:
        value = (cp.m + 1) * cp.theta_tail(cp.ell + 2)
        return Prediction("ren", spec, value, "corona, H chromatic-null, chi(H) < chi(G)-1")
    if cp.case == 3:
        return Prediction("ren", spec, cp.n * cp.ren_h, "corona, ren(H) >= 1, chi(H') >= chi(G)-1")
    if cp.case == 4:
        value = cp.n * cp.ren_h + (cp.m + 1) * cp.theta_tail(cp.chi_h_reduced + 2)
        return Prediction("ren", spec, value, "corona, ren(H) >= 1, chi(H') < chi(G)-1")
    return _na("ren", spec, "no corona case applies")


def predict_corona_diameter(g_spec: FamilySpec, h_spec: FamilySpec) -> Prediction:
    spec = fam.corona(g_spec, h_spec)
    q = "chromatic-diameter"
    try:
        cp = corona_parameters(g_spec, h_spec)
    except OrderGuardError as exc:
        return _na(q, spec, str(exc))
    if cp.case == 1:
        return Prediction(q, spec, 0, "corona, H chromatic-null, chi(H) >= chi(G)-1")
    if cp.case == 2:
        return Prediction(q, spec, cp.k - (cp.ell + 1), "corona, H chromatic-null, chi(H) < chi(G)-1")
    if cp.case == 3:
        return Prediction(q, spec, cp.diameter_h, "corona, ren(H) >= 1, chi(H') >= chi(G)-1")
    if cp.case == 4:
        value = cp.diameter_h + cp.k - (cp.chi_h_reduced + 1)
        return Prediction(q, spec, value, "corona, ren(H) >= 1, chi(H') < chi(G)-1")
    return _na(q, spec, "no corona case applies")


def predict(spec: FamilySpec, quantity: str) -> Prediction:
    if quantity == "J":
        return predict_j(spec)
    if quantity == "J*":
        return predict_j_star(spec)
    if quantity == "ren":
        return predict_ren(spec)
    if quantity == "chromatic-diameter":
        if spec.kind == "corona":
            return predict_corona_diameter(*spec.operands)
        return _na(quantity, spec, "chromatic diameter is only predicted for coronas")
    raise ValueError(f"unknown quantity {quantity!r}")


# --- exact side --------------------------------------------------------------

def exact_value(spec: FamilySpec, quantity: str) -> Value:
    g = build(spec)
    if quantity == "J":
        found = j_number(g)
        return found[0] if found else NOT_J
    if quantity == "J*":
        found = j_star_number(g)
        return found[0] if found else NOT_J
    if quantity == "ren":
        return ren_exact(g).ren
    if quantity == "chromatic-diameter":
        return chromatic_profile(g, chi_minus_colouring(g)).chromatic_diameter
    raise ValueError(f"unknown quantity {quantity!r}")


# --- sweeps --------------------------------------------------------------------

@dataclass(frozen=True)
class Sweep:
    instances: tuple[FamilySpec, ...]
    quantities: tuple[str, ...]


@dataclass(frozen=True)
class VerifyRow:
    instance: str
    quantity: str
    predicted: Value
    exact: Value | None
    status: str  # agree | disagree | not-applicable | skipped
    source: str
    note: str = ""

    @property
    def flagged(self) -> bool:
        return self.status == "disagree"

    def as_dict(self) -> dict:
        return {
            "instance": self.instance,
            "quantity": self.quantity,
            "predicted": self.predicted,
            "exact": self.exact,
            "status": self.status,
            "source": self.source,
            "note": self.note,
        }


_DEFAULT_QUANTITIES = {
    "path": ("J", "J*", "ren"),
    "cycle": ("J", "ren"),
    "wheel": ("J", "ren"),
    "fan": ("J",),
    "complete": ("J",),
    "jahangir": ("ren",),
    "mycielskian": ("J", "ren"),
    "join": ("ren",),
    "corona": ("ren", "chromatic-diameter"),
}

_PLURALS = {"paths": "path", "cycles": "cycle", "wheels": "wheel", "fans": "fan"}


def parse_range(text: str) -> list[int]:
    """``"3..12"``, ``"5"`` or ``"3,5,7"``."""
    text = text.strip()
    m = re.fullmatch(r"(\d+)\.\.(\d+)", text)
    if m:
        lo, hi = int(m.group(1)), int(m.group(2))
        if lo > hi:
            raise InvalidSpecError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise InvalidSpecError(f"bad range {text!r}") from None


def parse_sweep(tokens: list[str], quantities: list[str] | None = None) -> Sweep:
    """Build a sweep from CLI words.

    Forms: ``cycles 3..12``, ``jahangir n=1 m=3..6``, ``join cycle:5 cycle:5``,
    ``corona complete:4 complete:2``, ``mycielskian cycle:5 path:4``,
    ``spec SPEC [SPEC ...]``.
    """
    if not tokens:
        raise InvalidSpecError("empty sweep description")
    head, args = tokens[0].lower(), tokens[1:]
    head = _PLURALS.get(head, head)
    if head in ("path", "cycle", "wheel", "fan", "complete"):
        if len(args) != 1:
            raise InvalidSpecError(f"{head} sweep takes one range, e.g. {head}s 3..10")
        instances = [FamilySpec(head, (n,)) for n in parse_range(args[0])]
    elif head == "jahangir":
        ranges = {}
        for arg in args:
            key, sep, value = arg.partition("=")
            if not sep or key not in ("n", "m"):
                raise InvalidSpecError(f"jahangir sweep expects n=RANGE m=RANGE, got {arg!r}")
            ranges[key] = parse_range(value)
        if set(ranges) != {"n", "m"}:
            raise InvalidSpecError("jahangir sweep needs both n= and m=")
        instances = [fam.jahangir(n, m) for n in ranges["n"] for m in ranges["m"]]
    elif head in ("join", "corona"):
        if len(args) != 2:
            raise InvalidSpecError(f"{head} sweep takes two family specs")
        instances = [FamilySpec(head, operands=(fam.parse_family(args[0]), fam.parse_family(args[1])))]
    elif head == "mycielskian":
        instances = [fam.mycielskian(fam.parse_family(a)) for a in args]
    elif head == "spec":
        instances = [fam.parse_family(a) for a in args]
    else:
        raise InvalidSpecError(f"unknown sweep family {tokens[0]!r}")
    if not instances:
        raise InvalidSpecError("sweep has no instances")

    if quantities:
        bad = [q for q in quantities if q not in QUANTITIES]
        if bad:
            raise InvalidSpecError(f"unknown quantities {bad}; choose from {list(QUANTITIES)}")
        chosen = tuple(quantities)
    elif head == "spec":
        chosen = QUANTITIES
    else:
        chosen = _DEFAULT_QUANTITIES[head]
    return Sweep(tuple(instances), chosen)


def _note(spec: FamilySpec) -> str:
    if spec.kind == "jahangir" and spec.params[0] == 1:
        return f"n=1: this is the wheel with rim {spec.params[1]}; the wheel formula also applies"
    return ""


def verify_one(spec: FamilySpec, quantity: str) -> VerifyRow:
    pred = predict(spec, quantity)
    try:
        exact = exact_value(spec, quantity)
    except OrderGuardError as exc:
        return VerifyRow(str(spec), quantity, pred.predicted, None, "skipped", pred.source, str(exc))
    if not pred.applicable:
        status = "not-applicable"
    else:
        status = "agree" if pred.predicted == exact else "disagree"
    return VerifyRow(str(spec), quantity, pred.predicted, exact, status, pred.source, _note(spec))


def _verify_task(args) -> VerifyRow:
    return verify_one(*args)


def verify(sweep: Sweep, jobs: int = 1) -> list[VerifyRow]:
    """One row per (instance, quantity), in sweep order."""
    tasks = [(spec, q) for spec in sweep.instances for q in sweep.quantities]
    if jobs <= 1 or len(tasks) <= 1:
        return [verify_one(*t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_verify_task, tasks))


def format_verify_table(rows: list[VerifyRow]) -> str:
    header = ("instance", "quantity", "predicted", "exact", "status", "source")
    body = [
        (r.instance, r.quantity, str(r.predicted), "" if r.exact is None else str(r.exact),
         r.status + (" *" if r.flagged else ""), r.source)
        for r in rows
    ]
    widths = [max(len(line[i]) for line in [header] + body) for i in range(len(header))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(line, widths)).rstrip() for line in [header] + body]
    counts = {s: sum(1 for r in rows if r.status == s) for s in ("agree", "disagree", "not-applicable", "skipped")}
    lines.append(
        f"{len(rows)} rows: {counts['agree']} agree, {counts['disagree']} disagree, "
        f"{counts['not-applicable']} not applicable, {counts['skipped']} skipped"
    )
    notes = [f"{r.instance}: {r.note}" for r in rows if r.note]
    lines += sorted(set(notes))
    return "\n".join(lines)
