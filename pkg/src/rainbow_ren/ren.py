"""The rainbow neighbourhood equate number ren(G).

ren(G) is the least number of vertices whose deletion leaves an induced
subgraph with a J-colouring.  ``ren_exact`` scans deletion sets by size and,
within a size, in lexicographic order, so the reported witness is the
lexicographically smallest optimal deletion set.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Callable

from .chromatic import chromatic_number
from .errors import OrderGuardError
from .graph import CANONICAL_MAX_ORDER, Graph, canonical_form, induced_subgraph
from .jcolor import JWitness, is_j_colourable, j_number

REN_MAX_ORDER = 14


@dataclass(frozen=True)
class RenResult:
    ren: int
    removed: tuple[int, ...]
    surviving_witness: JWitness
    # kept[i] is the original label of vertex i of the survivor
    kept: tuple[int, ...]

    def as_dict(self) -> dict:
        return {
            "ren": self.ren,
            "removed": list(self.removed),
            "kept": list(self.kept),
            "surviving_witness": self.surviving_witness.as_dict(),
        }


class _VerdictCache:
    """J-colourability verdicts keyed by the survivor's isomorphism class."""

    def __init__(self):
        self.verdicts: dict[tuple[int, str], bool] = {}
        self.hits = 0

    def __call__(self, h: Graph) -> bool:
        if h.n > CANONICAL_MAX_ORDER:
            return is_j_colourable(h)
        key = (h.n, canonical_form(h))
        if key in self.verdicts:
            self.hits += 1
        else:
            self.verdicts[key] = is_j_colourable(h)
        return self.verdicts[key]


def _first_success(g: Graph, k: int, lead: int | None, test: Callable[[Graph], bool]):
    if lead is None:
        subsets = combinations(range(g.n), k)
    else:
        subsets = ((lead,) + rest for rest in combinations(range(lead + 1, g.n), k - 1))
    for subset in subsets:
        h, _ = induced_subgraph(g, subset)
        if test(h):
            return subset
    return None


def _scan_partition(args):
    g, k, lead = args
    return _first_success(g, k, lead, _VerdictCache())


def _result(g: Graph, removed: tuple[int, ...]) -> RenResult:
    h, relabel = induced_subgraph(g, removed)
    found = j_number(h)
    assert found is not None
    kept = tuple(sorted(relabel, key=relabel.get))
    return RenResult(len(removed), removed, found[1], kept)


def ren_exact(g: Graph, jobs: int = 1, max_order: int = REN_MAX_ORDER) -> RenResult:
    """Exact ren(G) with the lexicographically smallest optimal deletion set.

    With ``jobs > 1`` each deletion size is split by smallest deleted vertex and
    the parts are scanned in worker processes; the smallest successful subset is
    kept, so the answer does not depend on scheduling.
    """
    if g.n < 1:
        raise ValueError("ren is defined for graphs with at least one vertex")
    if g.n > max_order:
        raise OrderGuardError(
            f"ren_exact is limited to n <= {max_order} (got {g.n}); use ren_upper_bound instead"
        )
    if jobs <= 1:
        test = _VerdictCache()
        for k in range(g.n):
            found = _first_success(g, k, None, test)
            if found is not None:
                return _result(g, found)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for k in range(g.n):
                if k == 0:
                    parts = [(g, 0, None)]
                else:
                    parts = [(g, k, lead) for lead in range(g.n - k + 1)]
                hits = [s for s in pool.map(_scan_partition, parts) if s is not None]
                if hits:
                    return _result(g, min(hits))
    raise AssertionError("unreachable: a single vertex is always J-colourable")  # pragma: no cover


def _feasibility_score(h: Graph) -> int:
    # vertices whose closed neighbourhood is large enough to hold chi(h) colours
    chi = chromatic_number(h)
    return sum(1 for v in range(h.n) if h.degree(v) + 1 >= chi)


def ren_upper_bound(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Greedy upper bound on ren(G) with the deleted vertices (original labels).

    Each round first tries deleting a maximum-degree vertex, then a
    minimum-degree vertex, taking the first deletion that leaves a J-colourable
    graph.  If neither works, it deletes the vertex that leaves the most vertices
    able to see chi colours.
    """
    if g.n < 2:
        raise ValueError("ren_upper_bound needs at least two vertices")
    removed: list[int] = []
    current, labels = g, list(range(g.n))
    while not is_j_colourable(current):
        degs = current.degrees()
        top, bottom = max(degs), min(degs)
        candidates = [v for v in range(current.n) if degs[v] == top]
        candidates += [v for v in range(current.n) if degs[v] == bottom and degs[v] != top]
        choice = None
        for v in candidates:
            h, _ = induced_subgraph(current, [v])
            if is_j_colourable(h):
                choice = v
                break
        if choice is None:
            scored = []
            for v in range(current.n):
                h, _ = induced_subgraph(current, [v])
                scored.append((-_feasibility_score(h), v))
            choice = min(scored)[1]
        removed.append(labels[choice])
        current, _ = induced_subgraph(current, [choice])
        del labels[choice]
    return len(removed), tuple(sorted(removed))
