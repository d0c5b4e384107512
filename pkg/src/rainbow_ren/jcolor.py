"""J-colourings and J*-colourings.

A J-colouring is a proper colouring with colours ``1..k`` (all used) in which
every closed neighbourhood ``N[v]`` contains all ``k`` colours.  A J*-colouring
only asks this of internal vertices, taken here to be the vertices of degree at
least 2.  ``J(G)`` and ``J*(G)`` are the largest such ``k``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .chromatic import Colouring, chromatic_number
from .graph import Graph, iter_bits, popcount


class Mode(enum.Enum):
    J = "J"
    J_STAR = "J*"


@dataclass(frozen=True)
class JWitness:
    k: int
    colouring: Colouring
    mode: Mode

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "mode": self.mode.value,
            "colouring": list(self.colouring.assignment),
        }


def internal_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.degree(v) >= 2]


def _rainbow_vertices(g: Graph, mode: Mode) -> list[int]:
    return list(range(g.n)) if mode is Mode.J else internal_vertices(g)


def is_valid_witness(g: Graph, w: JWitness) -> bool:
    """Check a witness from scratch: proper, exactly ``k`` colours, rainbow where required."""
    a = w.colouring.assignment
    if len(a) != g.n or set(a) != set(range(1, w.k + 1)):
        return False
    if any(a[u] == a[v] for u, v in g.edges()):
        return False
    for v in _rainbow_vertices(g, w.mode):
        seen = {a[v]} | {a[u] for u in g.neighbours(v)}
        if len(seen) != w.k:
            return False
    return True


def j_colourable_with_k(g: Graph, k: int, mode: Mode = Mode.J) -> JWitness | None:
    """Search for a J- (or J*-) colouring with exactly ``k`` colours.

    Vertices are coloured in order of decreasing degree; a new colour may only be
    opened as the next unused one, which removes colour-permutation symmetry.  A
    branch dies as soon as some constrained vertex can no longer see ``k``
    distinct colours in its closed neighbourhood.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    n = g.n
    if n < k:
        return None
    adj = g.adj
    nbhd = [g.closed_nbhd(v) for v in range(n)]
    constrained = _rainbow_vertices(g, mode)
    if any(popcount(nbhd[v]) < k for v in constrained):
        return None
    is_constrained = [False] * n
    for v in constrained:
        is_constrained[v] = True

    order = sorted(range(n), key=lambda v: (-popcount(adj[v]), v))
    colour = [0] * n
    classes = [0] * (k + 1)
    uncoloured = g.vertex_mask

    def still_reachable(v: int) -> bool:
        nb = nbhd[v]
        present = sum(1 for c in range(1, k + 1) if classes[c] & nb)
        return present + popcount(nb & uncoloured) >= k

    def rec(i: int, used: int) -> bool:
        nonlocal uncoloured
        if i == n:
            return used == k
        if used + (n - i) < k:
            return False
        v = order[i]
        bit = 1 << v
        for c in range(1, min(used + 1, k) + 1):
            if classes[c] & adj[v]:
                continue
            colour[v] = c
            classes[c] |= bit
            uncoloured &= ~bit
            ok = all(still_reachable(u) for u in iter_bits(nbhd[v]) if is_constrained[u])
            if ok and rec(i + 1, max(used, c)):
                return True
            classes[c] &= ~bit
            uncoloured |= bit
            colour[v] = 0
        return False

    if not rec(0, 0):
        return None
    return JWitness(k, Colouring(tuple(colour)), mode)


def j_number(g: Graph) -> tuple[int, JWitness] | None:
    """``(J(G), witness)``, or ``None`` when ``g`` has no J-colouring."""
    if g.n == 0:
        return None
    floor = max(1, chromatic_number(g))
    for k in range(g.min_degree + 1, floor - 1, -1):
        w = j_colourable_with_k(g, k, Mode.J)
        if w is not None:
            return k, w
    return None


def j_star_number(g: Graph) -> tuple[int, JWitness] | None:
    """``(J*(G), witness)``, or ``None`` when ``g`` has no J*-colouring."""
    if g.n == 0:
        return None
    internal = internal_vertices(g)
    top = 1 + (min(g.degree(v) for v in internal) if internal else g.max_degree)
    floor = max(1, chromatic_number(g))
    for k in range(top, floor - 1, -1):
        w = j_colourable_with_k(g, k, Mode.J_STAR)
        if w is not None:
            return k, w
    return None


def is_j_colourable(g: Graph) -> bool:
    return j_number(g) is not None
