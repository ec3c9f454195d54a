import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_switch_classes, edge_masks, from_nx, orientation_mask, random_connected_oriented, switching_span
from skewenergy.enumeration import enumerate_trees
from skewenergy.families import family_graph
from skewenergy.graph import Graph, GraphError, OrientedGraph, all_cycles
from skewenergy.orientations import (
    EVENLY,
    ODD_CYCLE,
    ODDLY,
    class_key,
    cycle_parity,
    normalize,
    orientation_class_reps,
    parity_signature,
    switch,
    switching_equivalent,
)
from skewenergy.spectrum import char_poly_expansion

C4_PLUS = family_graph("C", 4, None, "+")
C4_MINUS = family_graph("C", 4, None, "-")
K23 = Graph.from_edges(5, [(x, w) for x in (0, 1) for w in (2, 3, 4)])


@st.composite
def switched_pairs(draw):
    rng = random.Random(draw(st.integers(0, 10**9)))
    og = random_connected_oriented(rng)
    w = draw(st.sets(st.integers(0, og.n - 1)))
    return og, w


def brute_equivalent(a: OrientedGraph, b: OrientedGraph) -> bool:
    return any(switch(a, w) == b for k in range(a.n + 1) for w in itertools.combinations(range(a.n), k))


class TestSwitch:
    def test_trivial_cuts(self):
        assert switch(C4_PLUS, []) == C4_PLUS
        assert switch(C4_PLUS, range(4)) == C4_PLUS

    def test_single_vertex_switch_is_equivalent(self):
        assert switching_equivalent(C4_PLUS, switch(C4_PLUS, {0}))

    def test_cycle_classes_are_distinct(self):
        assert not switching_equivalent(C4_PLUS, C4_MINUS)
        assert not brute_equivalent(C4_PLUS, C4_MINUS)

    def test_different_bases_rejected(self):
        with pytest.raises(GraphError):
            switching_equivalent(C4_PLUS, family_graph("P", 4))

    @pytest.mark.parametrize("n", range(2, 8))
    def test_tree_orientations_all_equivalent(self, n):
        rng = random.Random(n)
        for g in enumerate_trees(n):
            a = OrientedGraph.low_to_high(g)
            b = OrientedGraph.from_arcs(n, [(v, u) if rng.random() < 0.5 else (u, v) for u, v in g.edges])
            assert switching_equivalent(a, b)

    @given(switched_pairs())
    @settings(max_examples=150, deadline=None)
    def test_switching_preserves_polynomial_and_parities(self, pair):
        og, w = pair
        sw = switch(og, w)
        assert char_poly_expansion(sw) == char_poly_expansion(og)
        assert switching_equivalent(og, sw)
        assert class_key(og) == class_key(sw)
        for c in all_cycles(og):
            assert cycle_parity(og, c) == cycle_parity(sw, c)

    @given(switched_pairs())
    @settings(max_examples=100, deadline=None)
    def test_normalize_is_idempotent_and_equivalent(self, pair):
        og, _ = pair
        once = normalize(og)
        assert normalize(once) == once
        assert switching_equivalent(og, once)

    def test_equivalence_agrees_with_cut_space(self):
        rng = random.Random(5)
        for _ in range(200):
            a = random_connected_oriented(rng, 6)
            arcs = [(v, u) if rng.random() < 0.3 else (u, v) for u, v in a.arcs]
            b = OrientedGraph.from_arcs(a.n, arcs)
            edges, _ = edge_masks(a.base)
            diff = orientation_mask(a, edges) ^ orientation_mask(b, edges)
            assert switching_equivalent(a, b) == (diff in switching_span(a.base))


class TestParity:
    def test_labels_on_four_cycle(self):
        cw = OrientedGraph.from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        one_back = OrientedGraph.from_arcs(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        assert cycle_parity(cw, (0, 1, 2, 3)) == EVENLY
        assert cycle_parity(one_back, (0, 1, 2, 3)) == ODDLY

    def test_odd_cycle_and_non_cycles(self):
        tri = OrientedGraph.from_arcs(3, [(0, 1), (1, 2), (2, 0)])
        assert cycle_parity(tri, (0, 1, 2)) == ODD_CYCLE
        with pytest.raises(GraphError):
            cycle_parity(C4_PLUS, (0, 2, 1, 3))

    def test_theta_parity_triples(self):
        reps = orientation_class_reps(K23)
        triples = {parity_signature(og) for og in reps}
        assert len(reps) == 4 and len(triples) == 4
        for t in triples:
            # three 4-cycles pairwise share two edges: an odd number of them are evenly oriented
            assert t.count("-") % 2 == 1

    @pytest.mark.parametrize("n", range(3, 11))
    def test_every_cycle_has_two_classes(self, n):
        g = Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
        reps = orientation_class_reps(g)
        assert len(reps) == 2
        parities = {cycle_parity(og, tuple(range(n))) for og in reps}
        assert parities == ({EVENLY, ODDLY} if n % 2 == 0 else {ODD_CYCLE})
        assert not switching_equivalent(*reps)


class TestClassReps:
    def test_examples(self):
        assert len(orientation_class_reps(enumerate_trees(6)[0])) == 1
        assert len(orientation_class_reps(C4_PLUS.base)) == 2
        assert len(orientation_class_reps(K23)) == brute_switch_classes(K23) == 4

    def test_disconnected_rejected(self):
        with pytest.raises(GraphError, match="graph not connected"):
            orientation_class_reps(Graph.from_edges(4, [(0, 1), (2, 3)]))

    def test_counts_against_partition_small(self):
        for h in nx.graph_atlas_g()[1:53]:  # every graph on at most 5 vertices
            if not nx.is_connected(h):
                continue
            g = from_nx(h)
            reps = orientation_class_reps(g)
            assert len(reps) == brute_switch_classes(g) == 2 ** (g.m - g.n + 1)
            assert len({class_key(r) for r in reps}) == len(reps)
