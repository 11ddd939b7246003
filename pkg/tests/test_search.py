import itertools

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from isk4.graph import build_graph, mask_of, members
from isk4.harness.generators import complete_graph, cycle_graph, petersen_graph
from isk4.search import (
    Budget,
    SearchBudgetExceeded,
    articulation_points,
    blocks,
    fans,
    induced_cycles,
    induced_cycles_by_length,
    induced_paths,
    two_core,
)

from oracles import fan_exists, graphs, to_nx


def _is_induced_path(g, p):
    sub = to_nx(g).subgraph(p)
    return len(p) == 1 or (nx.is_connected(sub) and sub.number_of_edges() == len(p) - 1
                           and max(d for _, d in sub.degree()) <= 2)


def test_cycles_of_c5_and_k4():
    assert list(induced_cycles(cycle_graph(5))) == [(0, 1, 2, 3, 4)]
    assert len(list(induced_cycles(complete_graph(4)))) == 4
    assert list(induced_cycles(complete_graph(4), min_len=4)) == []


def test_petersen_hole_lengths():
    by_len = {}
    for c in induced_cycles_by_length(petersen_graph(), 4):
        by_len[len(c)] = by_len.get(len(c), 0) + 1
    # Petersen has girth 5: twelve 5-cycles, all of them induced
    ref = {}
    for c in nx.chordless_cycles(to_nx(petersen_graph())):
        ref[len(c)] = ref.get(len(c), 0) + 1
    assert by_len == {k: v for k, v in ref.items() if k >= 4}
    assert by_len[5] == 12


@given(graphs(max_order=9))
def test_induced_cycles_match_networkx(g):
    ours = list(induced_cycles(g))
    assert len(ours) == len(set(frozenset(c) for c in ours))
    ref = {frozenset(c) for c in nx.chordless_cycles(to_nx(g))}
    assert {frozenset(c) for c in ours} == ref
    for c in ours:
        assert c[0] == min(c) and c[1] < c[-1]


@given(graphs(max_order=9))
def test_cycles_by_length_sorted(g):
    ours = list(induced_cycles_by_length(g, 4))
    assert ours == sorted(ours, key=lambda c: (len(c), c))
    assert set(ours) == {c for c in induced_cycles(g) if len(c) >= 4}


@given(graphs(max_order=8), st.integers(1, 5))
def test_induced_paths_match_brute_force(g, k):
    ours = list(induced_paths(g, k))
    assert len(ours) == len(set(ours))
    ref = set()
    for r in range(1, k + 1):
        for p in itertools.permutations(range(g.order), r):
            if p[0] <= p[-1] and all(g.adjacent(a, b) for a, b in zip(p, p[1:])) and _is_induced_path(g, p):
                ref.add(p)
    assert set(ours) == ref


@given(graphs(min_order=2, max_order=8), st.data())
def test_fans_valid_and_complete(g, data):
    apex = data.draw(st.integers(0, g.order - 1))
    rest = [v for v in range(g.order) if v != apex]
    base = data.draw(st.lists(st.sampled_from(rest), unique=True, min_size=1, max_size=len(rest)))
    k = data.draw(st.integers(1, 3))
    found = list(fans(g, apex, mask_of(base), k))
    h = to_nx(g)
    for fan in found:
        assert len(fan) == k
        ends = [p[-1] for p in fan]
        assert len(set(ends)) == k and all(e in base for e in ends)
        verts = {v for p in fan for v in p} | set(base)
        path_edges = {frozenset(e) for p in fan for e in zip(p, p[1:])}
        induced = {frozenset(e) for e in h.subgraph(verts).edges()}
        base_edges = {frozenset(e) for e in h.subgraph(base).edges()}
        assert induced == path_edges | base_edges
    assert bool(found) == fan_exists(g, apex, base, k)


def test_fans_reject_apex_in_base():
    with pytest.raises(ValueError):
        list(fans(cycle_graph(4), 0, mask_of([0, 1]), 2))


@given(graphs(max_order=10))
def test_blocks_match_networkx(g):
    h = to_nx(g)
    assert sorted(articulation_points(g)) == sorted(nx.articulation_points(h))
    ours = sorted(sorted(members(b)) for b in blocks(g))
    # isolated vertices count as one-vertex blocks here; networkx omits them
    ref = sorted([sorted(c) for c in nx.biconnected_components(h)] + [[v] for v in nx.isolates(h)])
    assert ours == ref


@given(graphs(max_order=10))
def test_two_core_matches_networkx(g):
    assert set(members(two_core(g))) == set(nx.k_core(to_nx(g), 2).nodes())


def test_budget_exhaustion_raises():
    b = Budget(5)
    with pytest.raises(SearchBudgetExceeded):
        list(induced_cycles(petersen_graph(), budget=b))
    unlimited = Budget(None)
    list(induced_cycles(petersen_graph(), budget=unlimited))
    assert unlimited.used > 5


def test_budget_shared_across_calls():
    b = Budget(10**6)
    list(induced_cycles(cycle_graph(6), budget=b))
    first = b.used
    list(induced_cycles(cycle_graph(6), budget=b))
    assert b.used == 2 * first


def test_isolated_and_edge_blocks():
    g = build_graph(4, [(0, 1)])
    assert sorted(sorted(members(b)) for b in blocks(g)) == [[0, 1], [2], [3]]
