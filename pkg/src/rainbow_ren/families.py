"""Named graph families, derived constructions and their string grammar.

Labelling conventions (tests rely on them):

* ``path:n``        vertices 0..n-1 in path order.
* ``cycle:n``       vertices 0..n-1 around the cycle.
* ``wheel:n``       rim cycle 0..n-1, hub n.
* ``fan:n``         path 0..n-1, hub n.
* ``jahangir:n,m``  cycle 0..nm-1, hub nm adjacent to 0, n, 2n, ..., (m-1)n.
* ``mycielskian:G`` originals 0..n-1, twins n..2n-1 (twin of i is n+i), root 2n.
* ``shadow:G``      first copy 0..n-1, second copy n..2n-1.
* ``join:G/H``      G first, then H shifted by n(G).
* ``corona:G/H``    G first, then copy i of H in block n(G) + i*n(H).

Compound operands may be parenthesised, e.g. ``corona:(join:path:2/path:2)/(complete:2)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidSpecError
from .graph import Graph

# kind -> (number of integer parameters, minimum for each)
_SIMPLE = {
    "path": (1,),
    "cycle": (3,),
    "complete": (1,),
    "edgeless": (1,),
    "wheel": (3,),
    "fan": (1,),
    "jahangir": (1, 3),
}
_UNARY = {"mycielskian", "shadow"}
_BINARY = {"join", "corona"}


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...] = ()
    operands: tuple[FamilySpec, ...] = ()

    def __post_init__(self):
        if self.kind in _SIMPLE:
            mins = _SIMPLE[self.kind]
            if len(self.params) != len(mins) or self.operands:
                raise InvalidSpecError(f"{self.kind} takes {len(mins)} integer parameter(s)")
            for value, lo in zip(self.params, mins):
                if value < lo:
                    raise InvalidSpecError(f"{self.kind} parameter {value} below minimum {lo}")
        elif self.kind in _UNARY or self.kind in _BINARY:
            arity = 1 if self.kind in _UNARY else 2
            if self.params or len(self.operands) != arity:
                raise InvalidSpecError(f"{self.kind} takes {arity} graph operand(s)")
        else:
            raise InvalidSpecError(f"unknown family {self.kind!r}")

    def __str__(self) -> str:
        if self.kind in _SIMPLE:
            return f"{self.kind}:{','.join(map(str, self.params))}"

        def wrap(op: FamilySpec) -> str:
            return str(op) if op.kind in _SIMPLE else f"({op})"

        return f"{self.kind}:" + "/".join(wrap(op) for op in self.operands)


def path(n: int) -> FamilySpec:
    return FamilySpec("path", (n,))


def cycle(n: int) -> FamilySpec:
    return FamilySpec("cycle", (n,))


def complete(n: int) -> FamilySpec:
    return FamilySpec("complete", (n,))


def edgeless(n: int) -> FamilySpec:
    return FamilySpec("edgeless", (n,))


def wheel(rim: int) -> FamilySpec:
    return FamilySpec("wheel", (rim,))


def fan(n: int) -> FamilySpec:
    return FamilySpec("fan", (n,))


def jahangir(n: int, m: int) -> FamilySpec:
    return FamilySpec("jahangir", (n, m))


def mycielskian(inner: FamilySpec) -> FamilySpec:
    return FamilySpec("mycielskian", operands=(inner,))


def shadow(inner: FamilySpec) -> FamilySpec:
    return FamilySpec("shadow", operands=(inner,))


def join(a: FamilySpec, b: FamilySpec) -> FamilySpec:
    return FamilySpec("join", operands=(a, b))


def corona(g: FamilySpec, h: FamilySpec) -> FamilySpec:
    return FamilySpec("corona", operands=(g, h))


# --- parsing ---------------------------------------------------------------

def _strip_parens(text: str) -> str:
    text = text.strip()
    while text.startswith("(") and text.endswith(")") and _closing(text, 0) == len(text) - 1:
        text = text[1:-1].strip()
    return text


def _closing(text: str, start: int) -> int:
    depth = 0
    for i in range(start, len(text)):
        if text[i] == "(":
            depth += 1
        elif text[i] == ")":
            depth -= 1
            if depth == 0:
                return i
    raise InvalidSpecError(f"unbalanced parentheses in {text!r}")


def _split_top_slash(text: str) -> tuple[str, str]:
    depth = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            return text[:i], text[i + 1:]
    raise InvalidSpecError(f"expected two operands separated by '/' in {text!r}")


def parse_family(text: str) -> FamilySpec:
    """Parse the ``name:params`` grammar, e.g. ``jahangir:2,5`` or ``corona:complete:4/complete:2``."""
    text = _strip_parens(text)
    kind, sep, rest = text.partition(":")
    kind = kind.strip().lower()
    if not sep:
        raise InvalidSpecError(f"family spec {text!r} needs the form name:params")
    if kind in _SIMPLE:
        try:
            params = tuple(int(p) for p in rest.split(","))
        except ValueError:
            raise InvalidSpecError(f"bad integer parameters in {text!r}") from None
        return FamilySpec(kind, params)
    if kind in _UNARY:
        return FamilySpec(kind, operands=(parse_family(rest),))
    if kind in _BINARY:
        left, right = _split_top_slash(rest)
        return FamilySpec(kind, operands=(parse_family(left), parse_family(right)))
    raise InvalidSpecError(f"unknown family {kind!r}")


# --- generators ------------------------------------------------------------

def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for j in range(n) for i in range(j)])


def wheel_graph(rim: int) -> Graph:
    return Graph.from_edges(rim + 1, cycle_graph(rim).edges() + [(i, rim) for i in range(rim)])


def fan_graph(n: int) -> Graph:
    return Graph.from_edges(n + 1, path_graph(n).edges() + [(i, n) for i in range(n)])


def jahangir_graph(n: int, m: int) -> Graph:
    order = n * m
    spokes = [(i * n, order) for i in range(m)]
    return Graph.from_edges(order + 1, cycle_graph(order).edges() + spokes)


def mycielskian_graph(g: Graph) -> Graph:
    n = g.n
    edges = list(g.edges())
    for u, v in g.edges():
        edges += [(n + u, v), (u, n + v)]
    edges += [(n + i, 2 * n) for i in range(n)]
    return Graph.from_edges(2 * n + 1, edges)


def shadow_graph(g: Graph) -> Graph:
    n = g.n
    edges = []
    for u, v in g.edges():
        edges += [(u, v), (n + u, n + v), (u, n + v), (n + u, v)]
    return Graph.from_edges(2 * n, edges)


def join_graphs(g: Graph, h: Graph) -> Graph:
    adj = [row | (h.vertex_mask << g.n) for row in g.adj]
    adj += [(row << g.n) | g.vertex_mask for row in h.adj]
    return Graph(g.n + h.n, tuple(adj))


def corona_graphs(g: Graph, h: Graph) -> Graph:
    edges = list(g.edges())
    for i in range(g.n):
        base = g.n + i * h.n
        edges += [(base + u, base + v) for u, v in h.edges()]
        edges += [(i, base + u) for u in range(h.n)]
    return Graph.from_edges(g.n * (1 + h.n), edges)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    return Graph(g.n + h.n, g.adj + tuple(row << g.n for row in h.adj))


def build(spec: FamilySpec) -> Graph:
    k, p = spec.kind, spec.params
    if k == "path":
        return path_graph(p[0])
    if k == "cycle":
        return cycle_graph(p[0])
    if k == "complete":
        return complete_graph(p[0])
    if k == "edgeless":
        return Graph.empty(p[0])
    if k == "wheel":
        return wheel_graph(p[0])
    if k == "fan":
        return fan_graph(p[0])
    if k == "jahangir":
        return jahangir_graph(*p)
    inner = [build(op) for op in spec.operands]
    if k == "mycielskian":
        return mycielskian_graph(inner[0])
    if k == "shadow":
        return shadow_graph(inner[0])
    if k == "join":
        return join_graphs(*inner)
    if k == "corona":
        return corona_graphs(*inner)
    raise InvalidSpecError(f"unknown family {k!r}")  # pragma: no cover

