import random
from itertools import permutations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from rainbow_ren import families as fam
from rainbow_ren.errors import InvalidSpecError, OrderGuardError
from rainbow_ren.graph import (
    Graph, canonical_form, enumerate_graphs, graph_from_bits, induced_subgraph, is_isomorphic,
)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_graph_rejects_loops_and_asymmetry():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))


@given(graphs())
def test_degree_and_size_invariants(g):
    assert 0 <= g.m <= g.n * (g.n - 1) // 2
    assert sum(g.degrees()) == 2 * g.m
    for v in range(g.n):
        assert g.degree(v) == len(g.neighbours(v))
        assert not g.has_edge(v, v)


# --- families ---------------------------------------------------------------

def test_jahangir_1_5_is_the_wheel_on_six_vertices():
    assert fam.build(fam.jahangir(1, 5)) == fam.build(fam.wheel(5))


def test_jahangir_labelling():
    g = fam.build(fam.jahangir(2, 4))
    assert g.n == 9
    assert g.neighbours(8) == [0, 2, 4, 6]


def test_grotzsch_graph():
    g = fam.build(fam.mycielskian(fam.cycle(5)))
    assert (g.n, g.m) == (11, 20)
    assert nx.is_isomorphic(to_nx(g), nx.mycielski_graph(4))


def test_corona_k2_k2():
    g = fam.build(fam.corona(fam.complete(2), fam.complete(2)))
    assert (g.n, g.m) == (6, 7)
    # copy i of H occupies block n(G) + i*n(H)
    assert g.neighbours(0) == [1, 2, 3]
    assert g.neighbours(1) == [0, 4, 5]


def test_shadow_differs_from_mycielskian_minus_root():
    g = fam.build(fam.cycle(5))
    myc, _ = induced_subgraph(fam.mycielskian_graph(g), [10])
    sh = fam.shadow_graph(g)
    assert sh.m == 4 * g.m
    assert myc.m == 3 * g.m
    assert not is_isomorphic(myc, sh)


@pytest.mark.parametrize("spec", [
    fam.path(1), fam.path(6), fam.cycle(7), fam.complete(5), fam.edgeless(3), fam.wheel(6),
    fam.fan(4), fam.jahangir(2, 5), fam.jahangir(3, 3),
    fam.mycielskian(fam.path(4)), fam.shadow(fam.cycle(5)),
    fam.join(fam.cycle(5), fam.path(3)), fam.corona(fam.cycle(4), fam.complete(3)),
])
def test_order_and_size_formulas(spec):
    g = fam.build(spec)
    if spec.kind == "jahangir":
        n, m = spec.params
        assert g.n == n * m + 1
        assert g.m == n * m + m
    elif spec.kind == "mycielskian":
        inner = fam.build(spec.operands[0])
        assert (g.n, g.m) == (2 * inner.n + 1, 3 * inner.m + inner.n)
    elif spec.kind == "shadow":
        inner = fam.build(spec.operands[0])
        assert (g.n, g.m) == (2 * inner.n, 4 * inner.m)
    elif spec.kind == "join":
        a, b = (fam.build(op) for op in spec.operands)
        assert (g.n, g.m) == (a.n + b.n, a.m + b.m + a.n * b.n)
    elif spec.kind == "corona":
        a, b = (fam.build(op) for op in spec.operands)
        assert (g.n, g.m) == (a.n * (1 + b.n), a.m + a.n * (b.m + b.n))
    elif spec.kind == "wheel":
        assert (g.n, g.m) == (spec.params[0] + 1, 2 * spec.params[0])


@pytest.mark.parametrize("bad", [
    lambda: fam.cycle(2), lambda: fam.wheel(2), lambda: fam.jahangir(1, 2), lambda: fam.path(0),
    lambda: fam.FamilySpec("star", (3,)), lambda: fam.FamilySpec("join", operands=(fam.path(2),)),
])
def test_invalid_specs(bad):
    with pytest.raises(InvalidSpecError):
        bad()


@pytest.mark.parametrize("text, expected", [
    ("jahangir:2,5", fam.jahangir(2, 5)),
    ("corona:complete:4/complete:2", fam.corona(fam.complete(4), fam.complete(2))),
    ("corona:(complete:4)/(complete:2)", fam.corona(fam.complete(4), fam.complete(2))),
    ("join:(join:path:2/path:3)/cycle:5",
     fam.join(fam.join(fam.path(2), fam.path(3)), fam.cycle(5))),
    ("mycielskian:cycle:5", fam.mycielskian(fam.cycle(5))),
])
def test_parse_family(text, expected):
    spec = fam.parse_family(text)
    assert spec == expected
    assert fam.parse_family(str(spec)) == spec


@pytest.mark.parametrize("text", ["cycle", "cycle:x", "join:path:3", "blob:3", "corona:(path:2/path:2"])
def test_parse_family_errors(text):
    with pytest.raises(InvalidSpecError):
        fam.parse_family(text)


# --- induced subgraphs ------------------------------------------------------

def test_cycle_minus_vertex_is_path():
    h, relabel = induced_subgraph(fam.build(fam.cycle(5)), [0])
    assert h == fam.build(fam.path(4))
    assert relabel == {1: 0, 2: 1, 3: 2, 4: 3}


def test_wheel_minus_rim_vertex_is_fan():
    h, _ = induced_subgraph(fam.build(fam.wheel(5)), [2])
    assert is_isomorphic(h, fam.build(fam.fan(4)))


def test_remove_nothing_is_identity():
    g = fam.build(fam.jahangir(2, 3))
    assert induced_subgraph(g, [])[0] == g


def test_remove_everything_gives_empty_graph():
    h, relabel = induced_subgraph(fam.build(fam.path(3)), [0, 1, 2])
    assert h.n == 0 and relabel == {}


# --- canonical forms and enumeration ----------------------------------------

def test_canonical_form_examples():
    p3 = fam.build(fam.path(3))
    assert canonical_form(p3) == canonical_form(p3.relabel([1, 0, 2]))
    assert canonical_form(fam.build(fam.complete(3))) != canonical_form(p3)
    k22 = fam.build(fam.join(fam.edgeless(2), fam.edgeless(2)))
    assert canonical_form(fam.build(fam.cycle(4))) == canonical_form(k22)


def test_canonical_form_is_minimum_over_all_permutations():
    g = fam.build(fam.fan(4))
    brute = min(
        "".join("1" if g.has_edge(p[i], p[j]) else "0" for j in range(1, g.n) for i in range(j))
        for p in permutations(range(g.n))
    )
    assert canonical_form(g) == brute


def test_canonical_form_guard():
    with pytest.raises(OrderGuardError):
        canonical_form(fam.build(fam.path(10)))


@settings(max_examples=60)
@given(graphs(max_n=8), st.randoms(use_true_random=False))
def test_canonical_form_invariant_under_relabelling(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    assert canonical_form(g) == canonical_form(h)
    assert graph_from_bits(g.n, canonical_form(g)).m == g.m


@settings(max_examples=60)
@given(graphs(max_n=6), graphs(max_n=6))
def test_canonical_form_agrees_with_networkx_isomorphism(g, h):
    if g.n == h.n:
        assert (canonical_form(g) == canonical_form(h)) == nx.is_isomorphic(to_nx(g), to_nx(h))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_enumeration_matches_labelled_brute_force(n):
    pairs = [(i, j) for j in range(n) for i in range(j)]
    classes = set()
    for mask in range(1 << len(pairs)):
        g = Graph.from_edges(n, [p for k, p in enumerate(pairs) if mask >> k & 1])
        classes.add(canonical_form(g))
    got = [canonical_form(g) for g in enumerate_graphs(n)]
    assert sorted(classes) == got


def test_enumeration_counts():
    assert len(list(enumerate_graphs(1))) == 1
    assert len(list(enumerate_graphs(4))) == 11
    assert [g.edges() for g in enumerate_graphs(3, connected_only=True)] == [[(0, 2), (1, 2)], [(0, 1), (0, 2), (1, 2)]]
    assert len(list(enumerate_graphs(6))) == 156
    assert len(list(enumerate_graphs(6, connected_only=True))) == 112


def test_enumeration_is_strictly_increasing_and_pairwise_non_isomorphic():
    gs = list(enumerate_graphs(5))
    forms = [canonical_form(g) for g in gs]
    assert all(a < b for a, b in zip(forms, forms[1:]))
    rng = random.Random(5)
    for _ in range(40):
        a, b = rng.sample(gs, 2)
        assert not nx.is_isomorphic(to_nx(a), to_nx(b))


@pytest.mark.parametrize("n", [0, 7])
def test_enumeration_guard(n):
    with pytest.raises(OrderGuardError):
        list(enumerate_graphs(n))
