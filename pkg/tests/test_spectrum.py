import itertools
import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import even_coefficients, matching_counts, random_oriented_graph
from skewenergy.enumeration import enumerate_trees
from skewenergy.families import family_graph
from skewenergy.graph import GraphError, OrientedGraph, delete, disjoint_union
from skewenergy.spectrum import (
    ROUTES,
    QuadratureError,
    QuasiOrder,
    SkewPolynomial,
    bareiss_det,
    char_poly,
    char_poly_expansion,
    char_poly_oracle,
    char_poly_recurrence_edge,
    char_poly_recurrence_vertex,
    compare_sequences,
    coulson_energy,
    interpolate,
    quasi_compare,
    skew_energy_integral,
    skew_energy_spectral,
    union_poly,
)

B74 = family_graph("B", 7, 4, "---")


@st.composite
def oriented_graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    arcs = []
    for u, v in itertools.combinations(range(n), 2):
        if draw(st.booleans()):
            arcs.append((u, v) if draw(st.booleans()) else (v, u))
    return OrientedGraph.from_arcs(n, arcs)


class TestSkewPolynomial:
    def test_validation(self):
        with pytest.raises(ValueError):
            SkewPolynomial(4, (1, 2))
        with pytest.raises(ValueError):
            SkewPolynomial(3, (2, 1))
        with pytest.raises(ValueError):
            SkewPolynomial(3, (1, -1))

    def test_indexing_and_rendering(self):
        p = SkewPolynomial(7, (1, 8, 7, 0))
        assert p[0] == 1 and p[2] == 8 and p[4] == 7 and p[3] == 0
        assert p.full_coefficients() == [1, 0, 8, 0, 7, 0, 0, 0]
        assert str(p) == "x^7 + 8x^5 + 7x^3"

    def test_json_round_trip_keeps_big_integers(self):
        p = SkewPolynomial(4, (1, 10**30, 5))
        assert SkewPolynomial.from_json(p.to_json()) == p

    def test_union_matches_disjoint_union(self):
        rng = random.Random(3)
        for _ in range(40):
            a, b = random_oriented_graph(rng, 5), random_oriented_graph(rng, 5)
            joined = char_poly_expansion(disjoint_union(a, b))
            assert union_poly(char_poly_expansion(a), char_poly_expansion(b)) == joined


class TestRoutes:
    @pytest.mark.parametrize("route", list(ROUTES))
    def test_extremal_bicyclic_example(self, route):
        assert char_poly(B74, route).coeffs == (1, 8, 7, 0)

    def test_small_examples(self):
        p2 = OrientedGraph.from_arcs(2, [(0, 1)])
        assert char_poly_expansion(p2).coeffs == (1, 1)
        assert char_poly_oracle(p2).coeffs == (1, 1)
        assert char_poly_expansion(family_graph("C", 4, None, "+")).coeffs == (1, 4, 4)
        assert char_poly_expansion(family_graph("C", 4, None, "-")).coeffs == (1, 4, 0)
        for arcs in ([(0, 1), (1, 2), (2, 0)], [(0, 1), (1, 2), (0, 2)]):
            assert char_poly_oracle(OrientedGraph.from_arcs(3, arcs)).coeffs == (1, 3)

    def test_odd_cycles_carry_zero_weight(self):
        # two disjoint triangles: the only 6-vertex linear subgraph is both cycles, and det(S) = 0
        og = OrientedGraph.from_arcs(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
        for route in ROUTES:
            assert char_poly(og, route).coeffs == (1, 6, 9, 0)

    def test_edge_route_on_path_is_matching_count(self):
        p4 = OrientedGraph.from_arcs(4, [(0, 1), (2, 1), (2, 3)])
        assert char_poly_recurrence_edge(p4, (2, 1)).coeffs == (1, 3, 1)
        assert list(char_poly_recurrence_edge(p4).coeffs) == matching_counts(p4.base)

    def test_vertex_route_at_star_centre(self):
        s5 = family_graph("S", 5)
        assert char_poly_recurrence_vertex(s5, 0).coeffs == (1, 4, 0)

    def test_isolated_vertex_changes_nothing(self):
        og = OrientedGraph.from_arcs(5, [(0, 1), (1, 2), (2, 0), (2, 3)])
        with_iso = char_poly_recurrence_vertex(og, 4).coeffs
        without = char_poly_expansion(delete(og, vertices=[4])).coeffs
        assert with_iso[: len(without)] == without
        assert all(c == 0 for c in with_iso[len(without):])

    def test_bad_arguments(self):
        with pytest.raises(GraphError):
            char_poly_recurrence_edge(B74, (0, 6))
        with pytest.raises(GraphError):
            char_poly_recurrence_vertex(B74, 7)
        with pytest.raises(ValueError):
            char_poly(B74, "nope")

    @given(oriented_graphs())
    @settings(max_examples=120, deadline=None)
    def test_all_routes_match_faddeev_leverrier(self, og):
        even, odd = even_coefficients(og)
        assert all(c == 0 for c in odd)
        for route in ROUTES:
            assert list(char_poly(og, route).coeffs) == even

    @given(oriented_graphs(), st.data())
    @settings(max_examples=60, deadline=None)
    def test_recurrences_independent_of_start(self, og, data):
        ref = char_poly_expansion(og)
        v = data.draw(st.integers(0, og.n - 1))
        assert char_poly_recurrence_vertex(og, v) == ref
        if og.arcs:
            arc = data.draw(st.sampled_from(sorted(og.arcs)))
            assert char_poly_recurrence_edge(og, arc) == ref

    @given(oriented_graphs())
    @settings(max_examples=100, deadline=None)
    def test_leading_coefficients(self, og):
        p = char_poly_expansion(og)
        assert p.coeffs[0] == 1
        if og.n >= 2:
            assert p.coeffs[1] == og.m
        assert all(c >= 0 for c in p.coeffs)

    @pytest.mark.parametrize("n", range(2, 9))
    def test_tree_polynomial_ignores_orientation(self, n):
        rng = random.Random(n)
        for g in enumerate_trees(n):
            want = matching_counts(g)
            for _ in range(3):
                arcs = [(u, v) if rng.random() < 0.5 else (v, u) for u, v in g.edges]
                assert list(char_poly_expansion(OrientedGraph.from_arcs(n, arcs)).coeffs) == want


class TestExactArithmetic:
    def test_bareiss_against_numpy(self):
        rng = random.Random(11)
        for _ in range(60):
            k = rng.randint(1, 7)
            m = [[rng.randint(-3, 3) for _ in range(k)] for _ in range(k)]
            assert bareiss_det(m) == round(np.linalg.det(np.array(m, dtype=float)))

    def test_bareiss_needs_pivoting(self):
        assert bareiss_det([[0, 1], [1, 0]]) == -1
        assert bareiss_det([[0, 0], [1, 1]]) == 0

    def test_interpolation_recovers_polynomial(self):
        xs = [0, 1, 2, 3]
        ys = [5 - 2 * x + x**3 for x in xs]
        assert interpolate(xs, ys) == [Fraction(5), Fraction(-2), Fraction(0), Fraction(1)]


class TestQuasiOrder:
    def test_examples(self):
        p = SkewPolynomial(7, (1, 8, 7, 0))
        assert quasi_compare(p, p) is QuasiOrder.EQUIVALENT
        assert quasi_compare(SkewPolynomial(7, (1, 6, 7, 0)), p) is QuasiOrder.STRICTLY_LESS
        assert quasi_compare(SkewPolynomial(5, (1, 4, 0)), SkewPolynomial(5, (1, 4, 3))) is QuasiOrder.STRICTLY_LESS
        assert compare_sequences((1, 2, 3), (1, 3, 2)) is QuasiOrder.INCOMPARABLE

    def test_orders_differ(self):
        with pytest.raises(ValueError, match="orders differ"):
            quasi_compare(SkewPolynomial(4, (1, 2, 1)), SkewPolynomial(5, (1, 2, 1)))

    @given(st.lists(st.integers(0, 4), min_size=1, max_size=6), st.lists(st.integers(0, 4), min_size=1, max_size=6))
    def test_definition(self, p, q):
        k = max(len(p), len(q))
        p, q = p + [0] * (k - len(p)), q + [0] * (k - len(q))
        cmp = compare_sequences(p, q)
        below = any(x < y for x, y in zip(p, q))
        above = any(x > y for x, y in zip(p, q))
        expected = {
            (False, False): QuasiOrder.EQUIVALENT,
            (True, False): QuasiOrder.STRICTLY_LESS,
            (False, True): QuasiOrder.STRICTLY_GREATER,
            (True, True): QuasiOrder.INCOMPARABLE,
        }[(below, above)]
        assert cmp is expected
        assert cmp.is_le == (not above)
        assert cmp.is_ge == (not below)

    def test_strict_order_implies_smaller_energy(self, corpus):
        by_n = {}
        for og in corpus:
            by_n.setdefault(og.n, []).append((char_poly_expansion(og), skew_energy_spectral(og)))
        pairs = 0
        for items in by_n.values():
            for (p, ep), (q, eq) in itertools.combinations(items[:120], 2):
                cmp = quasi_compare(p, q)
                if cmp is QuasiOrder.STRICTLY_LESS:
                    assert ep < eq - 1e-9
                    pairs += 1
                elif cmp is QuasiOrder.STRICTLY_GREATER:
                    assert eq < ep - 1e-9
                    pairs += 1
        assert pairs > 1000


class TestEnergy:
    def test_closed_forms(self):
        assert skew_energy_spectral(family_graph("P", 2)) == pytest.approx(2.0, abs=1e-12)
        assert skew_energy_spectral(family_graph("S", 5)) == pytest.approx(4.0, abs=1e-12)
        assert skew_energy_spectral(family_graph("C", 4, None, "+")) == pytest.approx(4 * math.sqrt(2), abs=1e-12)
        assert skew_energy_integral(family_graph("P", 2)) == pytest.approx(2.0, abs=1e-9)
        assert skew_energy_integral(family_graph("C", 4, None, "-")) == pytest.approx(4.0, abs=1e-9)

    def test_star_energy_formula(self):
        for n in range(2, 12):
            assert skew_energy_integral(family_graph("S", n)) == pytest.approx(2 * math.sqrt(n - 1), abs=1e-9)

    def test_empty_and_edgeless(self):
        assert skew_energy_spectral(OrientedGraph.from_arcs(3, [])) == 0.0
        assert skew_energy_integral(OrientedGraph.from_arcs(3, [])) == 0.0

    @given(oriented_graphs())
    @settings(max_examples=80, deadline=None)
    def test_spectral_matches_complex_eigenvalues(self, og):
        s = og.skew_matrix().astype(float)
        ref = float(np.abs(np.linalg.eigvals(s)).sum()) if og.n else 0.0
        assert skew_energy_spectral(og) == pytest.approx(ref, abs=1e-8)

    @given(oriented_graphs())
    @settings(max_examples=80, deadline=None)
    def test_integral_matches_spectral(self, og):
        assert abs(skew_energy_integral(og) - skew_energy_spectral(og)) < 1e-6

    def test_quadrature_budget_exhaustion_reports_estimate(self):
        with pytest.raises(QuadratureError) as info:
            coulson_energy((1, 8, 7, 0), abs_tol=1e-300, max_panels=4)
        assert info.value.estimate == pytest.approx(7.2915, abs=1e-3)
        assert info.value.error >= 0
