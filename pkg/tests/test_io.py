import io
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import random_oriented_graph, to_nx
from skewenergy.graph import Graph, GraphError
from skewenergy.io import from_arc_list, from_graph6, read_graph6, to_arc_list, to_graph6, write_graph6


@st.composite
def graphs(draw, max_n=70):
    n = draw(st.integers(0, max_n))
    edges = set()
    if n >= 2:
        for _ in range(draw(st.integers(0, 3 * n))):
            u, v = draw(st.integers(0, n - 1)), draw(st.integers(0, n - 1))
            if u != v:
                edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(n, edges)


@given(graphs())
@settings(max_examples=150, deadline=None)
def test_graph6_matches_networkx_writer(g):
    ref = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert to_graph6(g) == ref
    assert from_graph6(ref) == g


def test_large_order_header_round_trips():
    g = Graph.from_edges(100, [(0, 99), (5, 6)])
    text = to_graph6(g)
    assert text.startswith("~")
    assert from_graph6(text) == g
    assert nx.from_graph6_bytes(text.encode()).number_of_edges() == 2


def test_known_strings():
    assert to_graph6(Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])) == "Ch"
    assert from_graph6("A_") == Graph.from_edges(2, [(0, 1)])


@pytest.mark.parametrize("bad", ["", "A", "A_x", "C~~~~", "?\x01"])
def test_malformed_graph6_reports_error(bad):
    with pytest.raises(GraphError):
        from_graph6(bad)


def test_multi_line_files():
    gs = [Graph.from_edges(3, [(0, 1)]), Graph.from_edges(5, [(0, 4), (1, 2)])]
    buf = io.StringIO()
    write_graph6(gs, buf)
    assert read_graph6(buf.getvalue().splitlines()) == gs


def test_arc_list_round_trip():
    rng = random.Random(7)
    for _ in range(200):
        og = random_oriented_graph(rng)
        assert from_arc_list(to_arc_list(og)) == og


def test_arc_list_format_and_comments():
    text = "# tiny\n3 2\n0 1\n2 1\n"
    og = from_arc_list(text)
    assert og.sorted_arcs == ((0, 1), (2, 1))
    assert to_arc_list(og).splitlines()[0] == "3 2"


@pytest.mark.parametrize(
    "text, where",
    [
        ("3 2\n0 1\n", "announces 2 arcs"),
        ("3 1\n0 5\n", "line 2"),
        ("x y\n", "line 1"),
        ("2 2\n0 1\n1 0\n", "line|edge|arc"),
    ],
)
def test_arc_list_errors_carry_location(text, where):
    with pytest.raises(GraphError, match=where):
        from_arc_list(text)
