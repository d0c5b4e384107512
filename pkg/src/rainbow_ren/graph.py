"""Simple undirected graphs on vertices ``0..n-1`` stored as adjacency bitsets.

Bit ``u`` of ``adj[v]`` is set when ``u`` and ``v`` are adjacent.  Everything
here treats graphs as immutable values, so they hash, compare as labelled
graphs and can be shared freely between threads or processes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import OrderGuardError

CANONICAL_MAX_ORDER = 9
ENUMERATE_MAX_ORDER = 6


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency must list one bitset per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency is not symmetric at ({v}, {u})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(popcount(row) for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in iter_bits(self.adj[v]) if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(row) for row in self.adj]

    def neighbours(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def closed_nbhd(self, v: int) -> int:
        """Bitset of ``N[v]``: ``v`` together with its neighbours."""
        return self.adj[v] | 1 << v

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = frontier = 1
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == self.vertex_mask

    def relabel(self, perm: list[int] | tuple[int, ...]) -> Graph:
        """Graph in which old vertex ``v`` becomes ``perm[v]``."""
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def induced_subgraph(g: Graph, remove: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Delete ``remove`` from ``g``.

    Returns the induced subgraph on the surviving vertices, relabelled densely in
    their original order, together with the old-to-new label map.
    """
    drop = 0
    for v in remove:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} not in graph of order {g.n}")
        drop |= 1 << v
    kept = [v for v in range(g.n) if not drop >> v & 1]
    relabel = {old: new for new, old in enumerate(kept)}
    adj = []
    for old in kept:
        row = 0
        for u in iter_bits(g.adj[old] & ~drop):
            row |= 1 << relabel[u]
        adj.append(row)
    return Graph(len(kept), tuple(adj)), relabel


def _column(g: Graph, prefix: tuple[int, ...], v: int) -> int:
    col = 0
    row = g.adj[v]
    for u in prefix:
        col = col << 1 | (row >> u & 1)
    return col


def canonical_form(g: Graph) -> str:
    """Lexicographically least adjacency bit string over all relabellings.

    The bit string lists the upper triangle column by column, as graph6 does:
    ``(0,1), (0,2), (1,2), (0,3), ...``.  Two graphs of the same order are
    isomorphic exactly when their canonical forms agree.

    The search fixes one position at a time; column ``j`` depends only on the
    first ``j + 1`` chosen vertices, so any partial labelling whose prefix is
    already larger than the best one can be discarded.
    """
    n = g.n
    if n > CANONICAL_MAX_ORDER:
        raise OrderGuardError(f"canonical_form supports n <= {CANONICAL_MAX_ORDER}, got {n}")
    m = g.m
    if m == 0 or m == n * (n - 1) // 2:
        return str(int(m > 0)) * (n * (n - 1) // 2)

    frontier: list[tuple[int, ...]] = [(v,) for v in range(n)]
    columns: list[str] = []
    for j in range(1, n):
        best = None
        nxt: list[tuple[int, ...]] = []
        for prefix in frontier:
            used = set(prefix)
            for v in range(n):
                if v in used:
                    continue
                col = _column(g, prefix, v)
                if best is None or col < best:
                    best = col
                    nxt = [prefix + (v,)]
                elif col == best:
                    nxt.append(prefix + (v,))
        columns.append(format(best, f"0{j}b"))
        frontier = nxt
    return "".join(columns)


def graph_from_bits(n: int, bits: str) -> Graph:
    """Inverse of the column-major upper-triangle bit layout."""
    if len(bits) != n * (n - 1) // 2:
        raise ValueError(f"expected {n * (n - 1) // 2} bits for n={n}, got {len(bits)}")
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos] == "1":
                edges.append((i, j))
            pos += 1
    return Graph.from_edges(n, edges)


def canonical_graph(g: Graph) -> Graph:
    """The representative of the isomorphism class of ``g`` built from its canonical form."""
    return graph_from_bits(g.n, canonical_form(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[str, ...]:
    # Every graph on n vertices is some graph on n-1 vertices plus one new vertex,
    # so extending each class representative by all neighbourhoods reaches every class.
    if n == 1:
        return ("",)
    forms = set()
    for bits in _classes(n - 1):
        base = graph_from_bits(n - 1, bits)
        for nbrs in range(1 << (n - 1)):
            adj = list(base.adj) + [nbrs]
            for u in iter_bits(nbrs):
                adj[u] |= 1 << (n - 1)
            forms.add(canonical_form(Graph(n, tuple(adj))))
    return tuple(sorted(forms))


def enumerate_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """Yield one graph per isomorphism class on ``n`` vertices.

    Graphs come out labelled by their canonical form, in increasing canonical
    order.  Orders above 6 should be read from graph6 files instead.
    """
    if not 1 <= n <= ENUMERATE_MAX_ORDER:
        raise OrderGuardError(f"enumerate_graphs supports 1 <= n <= {ENUMERATE_MAX_ORDER}, got {n}")
    for bits in _classes(n):
        g = graph_from_bits(n, bits)
        if connected_only and not g.is_connected():
            continue
        yield g
