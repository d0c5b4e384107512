"""Exact chromatic number, the canonical chromatic colouring and chromatic degrees.

The canonical chromatic colouring uses exactly chi(G) colours and makes the
class-size vector ``(theta_1, theta_2, ...)`` lexicographically as large as
possible: as many vertices as possible get colour 1, then colour 2, and so on.
Ties between optimal colourings are broken by taking the colour classes, as
sorted vertex lists, lexicographically smallest.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import ColouringError, OrderGuardError
from .graph import Graph, iter_bits, popcount

EXHAUSTIVE_MAX_ORDER = 10


@dataclass(frozen=True)
class Colouring:
    """A proper vertex colouring with colours ``1..k``, every colour used."""

    assignment: tuple[int, ...]

    def __post_init__(self):
        if self.assignment:
            used = set(self.assignment)
            if used != set(range(1, max(used) + 1)):
                raise ColouringError(f"colours must be exactly 1..k, got {sorted(used)}")

    @classmethod
    def from_classes(cls, classes, n: int) -> Colouring:
        assignment = [0] * n
        for colour, cls_vertices in enumerate(classes, 1):
            for v in cls_vertices:
                assignment[v] = colour
        if 0 in assignment:
            raise ColouringError("classes do not cover every vertex")
        return cls(tuple(assignment))

    @property
    def k(self) -> int:
        return max(self.assignment, default=0)

    @property
    def classes(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.assignment):
            out[c - 1].append(v)
        return tuple(tuple(c) for c in out)

    @property
    def theta(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    def class_masks(self) -> list[int]:
        masks = [0] * self.k
        for v, c in enumerate(self.assignment):
            masks[c - 1] |= 1 << v
        return masks

    def is_proper(self, g: Graph) -> bool:
        return len(self.assignment) == g.n and all(
            self.assignment[u] != self.assignment[v] for u, v in g.edges()
        )


# --- colourability ----------------------------------------------------------

def _max_clique(adj: tuple[int, ...], mask: int) -> int:
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + popcount(cand) <= best:
            return
        # pivot on the candidate with most candidate neighbours
        pivot = max(iter_bits(cand), key=lambda u: popcount(adj[u] & cand))
        for v in iter_bits(cand & ~adj[pivot]):
            expand(size + 1, cand & adj[v])
            cand &= ~(1 << v)
            if size + popcount(cand) <= best:
                return

    expand(0, mask)
    return best


def _greedy_colour_count(adj: tuple[int, ...], mask: int) -> int:
    classes: list[int] = []
    order = sorted(iter_bits(mask), key=lambda v: -popcount(adj[v] & mask))
    for v in order:
        for i, c in enumerate(classes):
            if not adj[v] & c:
                classes[i] = c | 1 << v
                break
        else:
            classes.append(1 << v)
    return len(classes)


def k_colourable(adj: tuple[int, ...], mask: int, k: int) -> bool:
    """Whether the subgraph induced on ``mask`` has a proper colouring with at most ``k`` colours."""
    if not mask:
        return True
    if k <= 0:
        return False
    classes: list[int] = []

    def rec(uncoloured: int) -> bool:
        if not uncoloured:
            return True
        # DSATUR: most constrained vertex first
        v, best = -1, (-1, -1)
        for u in iter_bits(uncoloured):
            score = (sum(1 for c in classes if adj[u] & c), popcount(adj[u] & uncoloured))
            if score > best:
                v, best = u, score
        rest = uncoloured & ~(1 << v)
        for i, c in enumerate(classes):
            if not adj[v] & c:
                classes[i] = c | 1 << v
                if rec(rest):
                    return True
                classes[i] = c
        if len(classes) < k:
            classes.append(1 << v)
            if rec(rest):
                return True
            classes.pop()
        return False

    return rec(mask)


def _chromatic_number_of(adj: tuple[int, ...], mask: int) -> int:
    if not mask:
        return 0
    lo = _max_clique(adj, mask)
    hi = _greedy_colour_count(adj, mask)
    for k in range(lo, hi):
        if k_colourable(adj, mask, k):
            return k
    return hi


def chromatic_number(g: Graph) -> int:
    """Exact chi(G) by backtracking between a clique bound and a greedy bound."""
    return _chromatic_number_of(g.adj, g.vertex_mask)


# --- canonical chromatic colouring -----------------------------------------

def _independent_sets(adj: tuple[int, ...], cand: int) -> Iterator[int]:
    """Every non-empty independent subset of ``cand``."""

    def rec(chosen: int, cand: int) -> Iterator[int]:
        if not cand:
            if chosen:
                yield chosen
            return
        v = (cand & -cand).bit_length() - 1
        yield from rec(chosen | 1 << v, cand & ~adj[v] & ~(1 << v))
        yield from rec(chosen, cand & ~(1 << v))

    yield from rec(0, cand)


def _lex_key(solution: tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]):
    theta, classes = solution
    return tuple(-t for t in theta), classes


def chi_minus_colouring(g: Graph) -> Colouring:
    """The canonical chromatic colouring of ``g`` (see module docstring).

    Branch and bound over the first colour class: try independent sets from the
    largest size down, keep those whose complement is still colourable with one
    colour fewer, and recurse.  Results are memoised on the residual vertex set.
    """
    if g.n == 0:
        return Colouring(())
    adj = g.adj
    chi = chromatic_number(g)
    colourable_memo: dict[tuple[int, int], bool] = {}
    best_memo: dict[tuple[int, int], tuple | None] = {}

    def colourable(mask: int, k: int) -> bool:
        key = (mask, k)
        if key not in colourable_memo:
            colourable_memo[key] = popcount(mask) >= k and k_colourable(adj, mask, k)
        return colourable_memo[key]

    def best(mask: int, k: int):
        key = (mask, k)
        if key in best_memo:
            return best_memo[key]
        result = None
        if k == 1:
            if all(not adj[v] & mask for v in iter_bits(mask)):
                result = ((popcount(mask),), (tuple(iter_bits(mask)),))
        else:
            by_size: dict[int, list[int]] = {}
            for s in _independent_sets(adj, mask):
                by_size.setdefault(popcount(s), []).append(s)
            for size in sorted(by_size, reverse=True):
                options = []
                for s in by_size[size]:
                    rest = mask & ~s
                    if not colourable(rest, k - 1):
                        continue
                    sub = best(rest, k - 1)
                    if sub is not None:
                        options.append(((size,) + sub[0], (tuple(iter_bits(s)),) + sub[1]))
                if options:
                    result = min(options, key=_lex_key)
                    break
        best_memo[key] = result
        return result

    theta, classes = best(g.vertex_mask, chi)
    return Colouring.from_classes(classes, g.n)


def _normalised(classes: list[int], n: int) -> Colouring:
    ordered = sorted(classes, key=lambda c: (-popcount(c), (c & -c).bit_length()))
    return Colouring.from_classes([list(iter_bits(c)) for c in ordered], n)


def all_chi_colourings(g: Graph) -> Iterator[Colouring]:
    """Every partition of V(G) into exactly chi(G) independent classes.

    Each partition is yielded once, with classes ordered by size (largest first)
    and then by smallest vertex.
    """
    if g.n > EXHAUSTIVE_MAX_ORDER:
        raise OrderGuardError(f"all_chi_colourings supports n <= {EXHAUSTIVE_MAX_ORDER}, got {g.n}")
    if g.n == 0:
        return
    chi = chromatic_number(g)
    adj, n = g.adj, g.n
    classes: list[int] = []

    def rec(v: int) -> Iterator[Colouring]:
        if n - v < chi - len(classes):
            return
        if v == n:
            yield _normalised(classes, n)
            return
        for i, c in enumerate(classes):
            if not adj[v] & c:
                classes[i] = c | 1 << v
                yield from rec(v + 1)
                classes[i] = c
        if len(classes) < chi:
            classes.append(1 << v)
            yield from rec(v + 1)
            classes.pop()

    yield from rec(0)


# --- chromatic degrees -----------------------------------------------------

@dataclass(frozen=True)
class ChromaticProfile:
    chromatic_degrees: tuple[int, ...]
    chi: int
    max_chromatic_degree: int
    min_chromatic_degree: int
    chromatic_diameter: int
    r_chi: int
    chromatic_null: bool

    def as_dict(self) -> dict:
        return {
            "chromatic_degrees": list(self.chromatic_degrees),
            "max_chromatic_degree": self.max_chromatic_degree,
            "min_chromatic_degree": self.min_chromatic_degree,
            "chromatic_diameter": self.chromatic_diameter,
            "r_chi": self.r_chi,
            "chromatic_null": self.chromatic_null,
        }


def chromatic_degrees(g: Graph, c: Colouring) -> tuple[int, ...]:
    if len(c.assignment) != g.n:
        raise ColouringError(f"colouring covers {len(c.assignment)} vertices, graph has {g.n}")
    if not c.is_proper(g):
        raise ColouringError("colouring is not proper for this graph")
    masks = c.class_masks()
    return tuple(sum(1 for m in masks if m & g.closed_nbhd(v)) for v in range(g.n))


def chromatic_profile(g: Graph, c: Colouring) -> ChromaticProfile:
    """Chromatic degrees and everything derived from them under colouring ``c``.

    The number of colours of ``c`` stands in for chi(G); for a chromatic
    colouring the two coincide.
    """
    degs = chromatic_degrees(g, c)
    k = c.k
    lo, hi = min(degs, default=0), max(degs, default=0)
    return ChromaticProfile(
        chromatic_degrees=degs,
        chi=k,
        max_chromatic_degree=hi,
        min_chromatic_degree=lo,
        chromatic_diameter=k - lo,
        r_chi=sum(1 for d in degs if d == k),
        chromatic_null=len(set(degs)) <= 1,
    )


def chromatic_distance(g: Graph, c: Colouring, u: int, v: int) -> int:
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError(f"vertices ({u}, {v}) out of range for n={g.n}")
    degs = chromatic_degrees(g, c)
    return abs(degs[u] - degs[v])


def r_chi_range(g: Graph) -> tuple[int, int]:
    """Smallest and largest r_chi over every chi(G)-colouring (n <= 10)."""
    values = [chromatic_profile(g, c).r_chi for c in all_chi_colourings(g)]
    return min(values), max(values)
