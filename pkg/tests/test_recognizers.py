import networkx as nx
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from isk4.graph import GraphError, build_graph
from isk4.harness.generators import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    gen_series_parallel,
    petersen_graph,
)
from isk4.recognizers import (
    IN_CLASS,
    OUT_OF_CLASS,
    Isk4Witness,
    LinkageWitness,
    K4Minor,
    check_isk4_witness,
    check_k4_minor,
    check_reduction,
    class_membership,
    complete_bipartite_parts,
    find_isk4,
    find_isk4_exact,
    find_isk4_search,
    find_k33_subgraph,
    find_linkage,
    find_triangle,
    is_linked,
    is_series_parallel,
    validate_hole,
)

from oracles import (
    fan_exists,
    graphs,
    has_isk4,
    has_k33_subgraph,
    has_k4_minor,
    has_triangle,
    to_nx,
    wheel_c8,
)

# C4 on a=0, b=1, c=2, d=3 plus v=4 adjacent to a, b, c
C4_PLUS_APEX = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2)])


# triangles and K3,3 ---------------------------------------------------------


def test_triangle_examples():
    assert find_triangle(complete_graph(3)).vertices == (0, 1, 2)
    assert find_triangle(cycle_graph(5)) is None
    assert find_triangle(petersen_graph()) is None


@given(graphs(max_order=9))
def test_triangle_matches_networkx(g):
    w = find_triangle(g)
    assert (w is not None) == has_triangle(g)
    if w is not None:
        assert w.validate(g)


def test_k33_examples():
    w = find_k33_subgraph(complete_bipartite(3, 3))
    assert {w.a, w.b} == {(0, 1, 2), (3, 4, 5)}
    assert find_k33_subgraph(cycle_graph(6)) is None
    pendant = build_graph(7, complete_bipartite(3, 3).edges() + [(0, 6)])
    w = find_k33_subgraph(pendant)
    assert {w.a, w.b} == {(0, 1, 2), (3, 4, 5)}


@given(graphs(max_order=8))
def test_k33_matches_brute_force(g):
    w = find_k33_subgraph(g)
    assert (w is not None) == has_k33_subgraph(g)
    if w is not None:
        assert w.validate(g)


# ISK4 -----------------------------------------------------------------------


def test_k4_is_its_own_subdivision():
    w = find_isk4(complete_graph(4))
    assert w.branch == (0, 1, 2, 3)
    assert all(len(p) == 2 for p in w.paths)
    assert check_isk4_witness(complete_graph(4), w)


def test_subdivided_edge_witness():
    w = find_isk4_exact(C4_PLUS_APEX)
    assert set(w.branch) == {0, 1, 2, 4}
    assert (0, 3, 2) in w.paths
    assert check_isk4_witness(C4_PLUS_APEX, w)


def test_c8_wheel_has_no_isk4():
    assert find_isk4_exact(wheel_c8()) is None
    assert find_isk4_search(wheel_c8()) is None


def test_petersen_contains_isk4():
    g = petersen_graph()
    for w in (find_isk4_exact(g), find_isk4_search(g)):
        assert w is not None and check_isk4_witness(g, w)


def test_tampered_witness_rejected():
    w = find_isk4(complete_graph(4))
    g = build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    assert not check_isk4_witness(g, w)
    bad = Isk4Witness(w.vertices, w.branch, w.paths[:5])
    assert not check_isk4_witness(complete_graph(4), bad)


@given(graphs(max_order=8))
def test_isk4_modes_match_brute_force(g):
    expected = has_isk4(g)
    for w in (find_isk4_exact(g), find_isk4_search(g)):
        assert (w is not None) == expected
        if w is not None:
            assert check_isk4_witness(g, w)
            assert nx.is_connected(to_nx(g).subgraph(w.vertices))


@given(graphs(min_order=9, max_order=11, p=0.3))
def test_isk4_search_agrees_with_exact_on_larger_graphs(g):
    assert (find_isk4_exact(g) is None) == (find_isk4_search(g) is None)


# series-parallel --------------------------------------------------------------


def test_trees_are_series_parallel():
    tree = build_graph(6, [(0, 1), (0, 2), (2, 3), (2, 4), (4, 5)])
    report = is_series_parallel(tree)
    assert report.series_parallel
    assert check_reduction(tree, report.reduction)


def test_k4_minor_of_k4_is_singletons():
    report = is_series_parallel(complete_graph(4))
    assert not report
    assert report.minor.branch_sets == ((0,), (1,), (2,), (3,))
    assert check_k4_minor(complete_graph(4), report.minor)


def test_wheel_minor_certificate():
    g = wheel_c8()
    report = is_series_parallel(g)
    assert not report
    assert check_k4_minor(g, report.minor)
    # the minor uses the center as one branch set on its own or merged
    assert any(8 in s for s in report.minor.branch_sets)


def test_two_k4s_sharing_a_vertex():
    edges = [(a, b) for a in range(4) for b in range(a + 1, 4)]
    edges += [(a, b) for a in (0, 4, 5, 6) for b in (0, 4, 5, 6) if a < b]
    g = build_graph(7, edges)
    report = is_series_parallel(g)
    assert not report and check_k4_minor(g, report.minor)


def test_generated_series_parallel():
    g = gen_series_parallel(10, 1)
    report = is_series_parallel(g)
    assert report and check_reduction(g, report.reduction)


def test_bad_certificates_rejected():
    g = complete_graph(4)
    assert not check_reduction(g, [("delete", 0)])
    assert not check_reduction(cycle_graph(3), [("suppress", 0, 1, 2)])
    assert not check_k4_minor(cycle_graph(4), K4Minor(((0,), (1,), (2,), (3,)), ()))


@given(graphs(max_order=6))
def test_series_parallel_matches_minor_brute_force(g):
    report = is_series_parallel(g)
    assert report.series_parallel == (not has_k4_minor(g))
    if report:
        assert check_reduction(g, report.reduction)
    else:
        assert check_k4_minor(g, report.minor)


@given(graphs(min_order=7, max_order=16, p=0.3))
def test_series_parallel_certificates_always_check(g):
    report = is_series_parallel(g)
    if report:
        assert check_reduction(g, report.reduction)
    else:
        assert check_k4_minor(g, report.minor)


# complete bipartite -------------------------------------------------------------


def test_complete_bipartite_examples():
    assert complete_bipartite_parts(complete_bipartite(3, 3)) == ([0, 1, 2], [3, 4, 5])
    assert sorted(map(sorted, complete_bipartite_parts(cycle_graph(4)))) == [[0, 2], [1, 3]]
    assert complete_bipartite_parts(cycle_graph(6)) is None


@given(graphs(min_order=2, max_order=8))
def test_complete_bipartite_matches_definition(g):
    assume(g.size > 0)
    parts = complete_bipartite_parts(g)
    h = to_nx(g)
    expected = False
    if nx.is_connected(h) and nx.is_bipartite(h):
        a, b = nx.bipartite.sets(h)
        expected = h.number_of_edges() == len(a) * len(b)
    assert (parts is not None) == expected


# linkage -------------------------------------------------------------------------


def test_linked_apex_on_c4():
    w = find_linkage(C4_PLUS_APEX, 4, [0, 1, 2, 3])
    assert w is not None
    assert sorted(w.paths) == [(4, 0), (4, 1), (4, 2)]
    assert is_linked(C4_PLUS_APEX, w)


def test_single_attachment_is_not_linked():
    g = build_graph(6, cycle_graph(5).edges() + [(5, 0)])
    assert find_linkage(g, 5, [0, 1, 2, 3, 4]) is None


def test_linkage_input_checks():
    with pytest.raises(GraphError):
        validate_hole(C4_PLUS_APEX, [0, 1, 4])
    with pytest.raises(GraphError):
        find_linkage(C4_PLUS_APEX, 0, [0, 1, 2, 3])
    bogus = LinkageWitness(4, (0, 1, 2, 3), ((4, 0), (4, 1), (4, 0)))
    assert not is_linked(C4_PLUS_APEX, bogus)


@given(graphs(min_order=5, max_order=8, p=0.4), st.data())
def test_linkage_existence_matches_brute_force(g, data):
    holes = [c for c in nx.chordless_cycles(to_nx(g)) if len(c) >= 4]
    assume(holes)
    hole = data.draw(st.sampled_from(holes))
    outside = [v for v in range(g.order) if v not in hole]
    assume(outside)
    v = data.draw(st.sampled_from(outside))
    # hole order from networkx is a cyclic sequence already
    w = find_linkage(g, v, hole)
    assert (w is not None) == fan_exists(g, v, list(hole), 3)
    if w is not None:
        assert is_linked(g, w)
        # a vertex linked to a hole in a triangle-free graph closes an ISK4
        if not has_triangle(g):
            assert has_isk4(g)


# class membership -------------------------------------------------------------------


def test_class_membership_examples():
    assert class_membership(cycle_graph(5)).verdict == IN_CLASS
    tri = class_membership(complete_graph(3))
    assert tri.verdict == OUT_OF_CLASS and tri.witness.to_dict()["kind"] == "triangle"
    pet = class_membership(petersen_graph())
    assert pet.verdict == OUT_OF_CLASS and pet.witness.to_dict()["kind"] == "isk4"


def test_inexact_flag_above_bound():
    report = class_membership(cycle_graph(20), exact_bound=14)
    assert report.in_class and not report.exact
    assert class_membership(cycle_graph(10)).exact


def test_budget_exhaustion_is_inconclusive():
    report = class_membership(petersen_graph(), exact_bound=0, budget=3)
    assert report.verdict == "inconclusive"
