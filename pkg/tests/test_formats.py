import io

import networkx as nx
import pytest
from hypothesis import given

from isk4.formats import (
    EdgeListError,
    Graph6Error,
    emit_edge_list,
    emit_graph6,
    parse_edge_list,
    parse_graph6,
    parse_graph6_lines,
    read_graphs,
)
from isk4.graph import build_graph
from isk4.harness.enumerate import enumerate_all_graphs
from isk4.harness.generators import complete_graph, cycle_graph

from oracles import from_nx, graphs, to_nx

# K4 by hand: prefix chr(63 + 4) = "C"; the six upper-triangle bits are all
# one, packed into a single byte 63 + 0b111111 = 126 = "~".
K4_GRAPH6 = "C~"


def test_k4_constant():
    g = parse_graph6(K4_GRAPH6)
    assert g == complete_graph(4)
    assert emit_graph6(complete_graph(4)) == K4_GRAPH6


def test_header_accepted():
    assert parse_graph6(">>graph6<<" + K4_GRAPH6) == complete_graph(4)
    assert emit_graph6(complete_graph(4), header=True) == ">>graph6<<C~"


def test_roundtrip_small_enumeration():
    for g in enumerate_all_graphs(6):
        assert parse_graph6(emit_graph6(g)) == g


@given(graphs(max_order=70, p=0.1))
def test_graph6_agrees_with_networkx(g):
    ours = emit_graph6(g)
    theirs = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert ours == theirs
    assert from_nx(nx.from_graph6_bytes(ours.encode())) == g


@pytest.mark.parametrize(
    "text, kind",
    [("C!", "malformed"), ("D", "truncated"), ("C~~", "trailing"), ("Aw", "padding"), ("", "truncated")],
)
def test_graph6_error_kinds(text, kind):
    with pytest.raises(Graph6Error) as info:
        parse_graph6(text)
    assert info.value.kind == kind
    assert info.value.offset is not None


def test_edge_list_c5():
    g = parse_edge_list("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
    assert g == cycle_graph(5)
    assert parse_edge_list(emit_edge_list(g)) == g


@pytest.mark.parametrize(
    "text",
    ["", "5\n", "2 1\n", "2 1\n0 x\n", "2 1\n0 0\n", "2 1\n0 1 2\n", "a b\n"],
)
def test_edge_list_errors(text):
    with pytest.raises(EdgeListError):
        parse_edge_list(text)


def test_edge_list_comments_and_blank_lines():
    g = parse_edge_list("# triangle\n3 3\n\n0 1\n1 2 # last\n2 0\n")
    assert g.size == 3


def test_read_graphs_sources(tmp_path):
    path = tmp_path / "two.g6"
    path.write_text("C~\nDhc\n\n")
    assert [g.order for g in read_graphs(path)] == [4, 5]
    assert [g.order for g in read_graphs(io.StringIO("3 0\n"), "edgelist")] == [3]
    assert len(parse_graph6_lines("C~\n  \nC~\n")) == 2
    with pytest.raises(ValueError):
        read_graphs(io.StringIO(""), "dot")


def test_medium_size_prefix():
    g = build_graph(100, [(0, 99)])
    assert parse_graph6(emit_graph6(g)) == g
    assert emit_graph6(g).startswith("~")
