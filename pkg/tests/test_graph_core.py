import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from critgraph.errors import DisconnectedInputError, TooSmallError
from critgraph.generators import (
    complete_graph,
    cycle_graph,
    path_graph,
    petersen,
    wheel,
)
from critgraph.graph import (
    Graph,
    SignedGraph,
    connectivity,
    is_bipartite,
    is_bipartite_signed,
    is_k_connected,
    t_value,
    two_cuts,
)

from conftest import glued_k4s, to_nx


def small_graphs(max_n=8, connected=False):
    """Hypothesis strategy for graphs as (n, edge subset)."""

    @st.composite
    def build(draw):
        n = draw(st.integers(min_value=1, max_value=max_n))
        pairs = list(itertools.combinations(range(n), 2))
        picks = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs))) if pairs else []
        g = Graph(n, picks)
        if connected and not g.is_connected():
            # join components along a spanning chain; keeps the draw simple
            comps = g.components()
            extra = [
                (comps[i][0], comps[i + 1][0]) for i in range(len(comps) - 1)
            ]
            g = Graph(n, g.edges + tuple(extra))
        return g

    return build()


class TestGraphBasics:
    def test_canonical_edges_and_dedup(self):
        g = Graph(3, [(2, 1), (1, 2), (0, 1)])
        assert g.edges == ((0, 1), (1, 2))
        assert g.has_edge(2, 1) and not g.has_edge(0, 2)

    def test_loops_rejected(self):
        with pytest.raises(ValueError):
            Graph(3, [(1, 1)])

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            Graph(3, [(0, 3)])

    def test_induced_relabels(self):
        g = complete_graph(4)
        sub, labels = g.induced([1, 2, 3])
        assert sub.n == 3 and sub.m == 3
        assert labels == (1, 2, 3)

    def test_signed_parity_total(self):
        g = cycle_graph(3)
        with pytest.raises(ValueError):
            SignedGraph(g, {(0, 1): 1})
        sg = SignedGraph.lift(g)
        assert sg.walk_parity([0, 1, 2, 0]) == 1


class TestTValue:
    def test_k4(self):
        assert t_value(complete_graph(4)) == 3

    def test_c5(self):
        assert t_value(cycle_graph(5)) == 1

    def test_wheel_6_1(self):
        w = wheel(6, 1)
        assert (w.graph.n, w.graph.m) == (6, 10)
        assert t_value(w.graph) == 5

    def test_disconnected_raises(self):
        with pytest.raises(DisconnectedInputError):
            t_value(Graph(4, [(0, 1), (2, 3)]))

    @given(small_graphs(max_n=8, connected=True))
    @settings(max_examples=60, deadline=None)
    def test_nonnegative_and_tree_equality(self, g):
        t = t_value(g)
        assert t >= 0
        assert (t == 0) == (g.m == g.n - 1)


class TestConnectivity:
    def test_k4(self):
        assert connectivity(complete_graph(4)) == 3

    def test_c5(self):
        assert connectivity(cycle_graph(5)) == 2

    def test_petersen(self):
        # oracle: networkx all-pairs vertex connectivity
        assert connectivity(petersen()) == 3
        assert nx.node_connectivity(to_nx(petersen())) == 3

    def test_too_small(self):
        with pytest.raises(TooSmallError):
            connectivity(Graph(1))

    def test_disconnected_zero(self):
        assert connectivity(Graph(4, [(0, 1), (2, 3)])) == 0

    @given(small_graphs(max_n=7, connected=True))
    @settings(max_examples=40, deadline=None)
    def test_matches_networkx(self, g):
        if g.n < 2:
            return
        assert connectivity(g) == nx.node_connectivity(to_nx(g))


class TestTwoCuts:
    def test_k4_empty(self):
        assert two_cuts(complete_graph(4)) == []

    def test_glued_k4s_contains_glued_pair(self):
        cuts = two_cuts(glued_k4s())
        assert {c.vertices for c in cuts} == {(0, 1)}

    def test_p4(self):
        # oracle (frozen): exhaustive pair removal on the path 0-1-2-3
        cuts = {c.vertices for c in two_cuts(path_graph(4))}
        assert cuts == {(0, 2), (1, 2), (1, 3)}

    def test_too_small(self):
        with pytest.raises(TooSmallError):
            two_cuts(cycle_graph(3))

    @given(small_graphs(max_n=7, connected=True))
    @settings(max_examples=40, deadline=None)
    def test_empty_iff_three_connected(self, g):
        if g.n < 4:
            return
        assert (two_cuts(g) == []) == is_k_connected(g, 3)


class TestSignedBipartite:
    def test_even_cycle_all_ones(self):
        sg = SignedGraph.lift(cycle_graph(4))
        parts = is_bipartite_signed(sg)
        assert parts is not None
        a, b = parts
        assert sorted(a + b) == [0, 1, 2, 3]
        # crossing edges odd, inner edges even
        aset = set(a)
        for u, v in sg.graph.edges:
            crossing = (u in aset) != (v in aset)
            assert sg.parity(u, v) == (1 if crossing else 0)

    def test_odd_cycle_absent(self):
        assert is_bipartite_signed(SignedGraph.lift(cycle_graph(3))) is None

    def test_single_flipped_edge_breaks_c4(self):
        g = cycle_graph(4)
        parity = {e: 1 for e in g.edges}
        parity[(0, 1)] = 0  # cycle parity becomes 3 = odd
        assert is_bipartite_signed(SignedGraph(g, parity)) is None

    def test_isolated_vertices_go_left(self):
        sg = SignedGraph.lift(Graph(3))
        a, b = is_bipartite_signed(sg)
        assert a == (0, 1, 2) and b == ()

    @given(small_graphs(max_n=7))
    @settings(max_examples=60, deadline=None)
    def test_lift_agrees_with_two_coloring(self, g):
        assert (is_bipartite_signed(SignedGraph.lift(g)) is not None) == nx.is_bipartite(
            to_nx(g)
        )
        assert is_bipartite(g) == nx.is_bipartite(to_nx(g))


class TestFourCriticalDensity:
    def test_t_beats_third_of_edges_and_half_of_vertices(self, four_critical_upto_8):
        # min degree 3 forces 2E >= 3V, hence t >= E/3 >= V/2
        for g in four_critical_upto_8:
            t = t_value(g)
            assert 3 * t >= g.m
            assert 2 * g.m >= 3 * g.n
