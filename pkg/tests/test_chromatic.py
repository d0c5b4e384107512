import pytest
from hypothesis import given, settings

from conftest import graphs
from oracles import brute_chromatic_number, brute_theta_max, independent_partitions, adjacency
from rainbow_ren import families as fam
from rainbow_ren.chromatic import (
    Colouring, all_chi_colourings, chi_minus_colouring, chromatic_distance, chromatic_number,
    chromatic_profile, r_chi_range,
)
from rainbow_ren.errors import ColouringError, OrderGuardError
from rainbow_ren.graph import Graph


@pytest.mark.parametrize("spec, chi", [
    (fam.complete(5), 5),
    (fam.cycle(5), 3),
    (fam.mycielskian(fam.cycle(5)), 4),  # oracle: 3^11 assignments, none proper
    (fam.edgeless(4), 1),
    (fam.wheel(5), 4),
])
def test_chromatic_number_examples(spec, chi):
    assert chromatic_number(fam.build(spec)) == chi


@settings(max_examples=80)
@given(graphs(max_n=7))
def test_chromatic_number_matches_brute_force(g):
    assert chromatic_number(g) == brute_chromatic_number(g)


@pytest.mark.parametrize("spec, theta", [
    (fam.complete(3), (1, 1, 1)),
    (fam.cycle(5), (2, 2, 1)),
    (fam.corona(fam.complete(2), fam.complete(2)), (2, 2, 2)),
])
def test_chi_minus_theta_examples(spec, theta):
    g = fam.build(spec)
    assert brute_theta_max(g) == theta
    assert chi_minus_colouring(g).theta == theta


def test_chi_minus_canonical_tie_break_on_c5():
    c = chi_minus_colouring(fam.build(fam.cycle(5)))
    assert c.classes == ((0, 2), (1, 3), (4,))


def _max_independent(g, vertices):
    best = 0
    for mask in range(1 << len(vertices)):
        chosen = [v for i, v in enumerate(vertices) if mask >> i & 1]
        if all(not g.has_edge(u, v) for u in chosen for v in chosen):
            best = max(best, len(chosen))
    return best


def test_unconstrained_greedy_can_overshoot_chi():
    g = fam.build(fam.corona(fam.complete(2), fam.complete(2)))
    # each class below is a maximum independent set of what is left, yet 4 colours result
    greedy = [[2, 4], [3, 5], [0], [1]]
    left = list(range(g.n))
    for cls in greedy:
        assert len(cls) == _max_independent(g, left)
        left = [v for v in left if v not in cls]
    assert chromatic_number(g) == 3
    assert chi_minus_colouring(g).k == 3


@settings(max_examples=60)
@given(graphs(max_n=7))
def test_chi_minus_is_lexicographic_maximum(g):
    c = chi_minus_colouring(g)
    assert c.is_proper(g)
    assert c.k == chromatic_number(g)
    every = list(all_chi_colourings(g))
    top = max(o.theta for o in every)
    assert c.theta == top
    assert c.classes == min(o.classes for o in every if o.theta == top)


def test_all_chi_colourings_counts():
    assert len(list(all_chi_colourings(fam.build(fam.complete(3))))) == 1
    assert len(list(all_chi_colourings(fam.build(fam.path(3))))) == 1
    assert len(list(all_chi_colourings(fam.build(fam.cycle(4))))) == 1


@settings(max_examples=40)
@given(graphs(max_n=7))
def test_all_chi_colourings_matches_partition_oracle(g):
    chi = brute_chromatic_number(g)
    expected = {
        frozenset(frozenset(b) for b in part)
        for part in independent_partitions(adjacency(g), list(range(g.n)))
        if len(part) == chi
    }
    got = [frozenset(frozenset(cl) for cl in c.classes) for c in all_chi_colourings(g)]
    assert len(got) == len(set(got))
    assert set(got) == expected
    for c in all_chi_colourings(g):
        keys = [(-len(cl), cl[0]) for cl in c.classes]
        assert keys == sorted(keys)


def test_all_chi_colourings_guard():
    with pytest.raises(OrderGuardError):
        list(all_chi_colourings(fam.build(fam.path(11))))


def test_profile_complete():
    g = fam.build(fam.complete(4))
    p = chromatic_profile(g, chi_minus_colouring(g))
    assert p.chromatic_degrees == (4, 4, 4, 4)
    assert (p.chromatic_diameter, p.r_chi, p.chromatic_null) == (0, 4, True)


def test_profile_c5():
    g = fam.build(fam.cycle(5))
    p = chromatic_profile(g, chi_minus_colouring(g))
    assert (p.min_chromatic_degree, p.max_chromatic_degree) == (2, 3)
    assert (p.chromatic_diameter, p.r_chi, p.chromatic_null) == (1, 3, False)


def test_profile_p5():
    g = fam.build(fam.path(5))
    p = chromatic_profile(g, chi_minus_colouring(g))
    assert p.chromatic_degrees == (2,) * 5
    assert (p.chromatic_diameter, p.r_chi, p.chromatic_null) == (0, 5, True)


def test_chromatic_distance():
    g = fam.build(fam.cycle(5))
    c = chi_minus_colouring(g)
    assert chromatic_distance(g, c, 3, 3) == 0
    assert chromatic_distance(g, c, 0, 1) == 1  # degrees 3 and 2
    k = fam.build(fam.complete(6))
    ck = chi_minus_colouring(k)
    assert all(chromatic_distance(k, ck, u, v) == 0 for u in range(6) for v in range(6))
    with pytest.raises(ValueError):
        chromatic_distance(g, c, 0, 9)


def test_profile_rejects_mismatched_colouring():
    g = fam.build(fam.cycle(5))
    with pytest.raises(ColouringError):
        chromatic_profile(g, Colouring((1, 2, 1)))
    with pytest.raises(ColouringError):
        chromatic_profile(g, Colouring((1, 1, 2, 1, 2)))
    with pytest.raises(ColouringError):
        Colouring((1, 3))


@settings(max_examples=80)
@given(graphs(max_n=8))
def test_profile_invariants(g):
    c = chi_minus_colouring(g)
    p = chromatic_profile(g, c)
    chi = chromatic_number(g)
    assert all(p.min_chromatic_degree <= d <= p.max_chromatic_degree <= chi for d in p.chromatic_degrees)
    assert p.r_chi == sum(1 for d in p.chromatic_degrees if d == chi)
    assert 0 <= p.chromatic_diameter <= chi - 1
    assert (p.chromatic_diameter == 0) == (p.r_chi == g.n)
    if g.n >= 2 and g.is_connected():
        assert p.min_chromatic_degree >= 2


def test_r_chi_range_exposes_colouring_dependence():
    # C_5 has several chromatic colourings; canonical r_chi lies within the range
    g = fam.build(fam.cycle(5))
    lo, hi = r_chi_range(g)
    assert lo <= chromatic_profile(g, chi_minus_colouring(g)).r_chi <= hi


def test_empty_graph_colouring():
    assert chi_minus_colouring(Graph.empty(0)).k == 0
