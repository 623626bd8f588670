import itertools

import pytest

from critgraph.critical import is_k_critical_bool
from critgraph.cycles import enumerate_cycles, f_count
from critgraph.errors import (
    BadParametersError,
    EdgeAbsentError,
    ScaleGuardError,
)
from critgraph.generators import (
    CorpusSpec,
    apex_odd_filter,
    complete_graph,
    connected_graphs,
    corpus,
    cycle_graph,
    hajos_join,
    wheel,
)
from critgraph.graph import is_k_connected, t_value
from critgraph.io import write_graph6
from critgraph.iso import are_isomorphic, canonical_form


class TestWheel:
    def test_w61(self):
        w = wheel(6, 1)
        assert (w.graph.n, w.graph.m) == (6, 10)
        assert w.odd and w.rim == (0, 1, 2, 3, 4) and w.hub == (5,)

    def test_w41_is_k4(self):
        assert are_isomorphic(wheel(4, 1).graph, complete_graph(4))

    def test_w72_edge_count(self):
        w = wheel(7, 2)
        assert (w.graph.n, w.graph.m) == (7, 16)  # 5 rim + 10 join + 1 clique
        assert w.odd  # rim length 5

    def test_w62_even(self):
        assert not wheel(6, 2).odd  # rim length 4

    def test_bad_parameters(self):
        with pytest.raises(BadParametersError):
            wheel(3, 1)
        with pytest.raises(BadParametersError):
            wheel(5, 0)

    @pytest.mark.parametrize("n", [4, 6, 8])
    def test_odd_wheels_critical_with_known_f(self, n):
        w = wheel(n, 1)
        assert w.odd
        assert is_k_critical_bool(w.graph, 4)
        from math import comb

        assert f_count(w.graph) == comb(n - 1, 2) + 1

    def test_wheel_criticality_iff_odd_rim(self):
        for n in range(4, 9):
            assert is_k_critical_bool(wheel(n, 1).graph, 4) == (n % 2 == 0)


class TestApexOddFilter:
    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_shape_and_parities(self, n):
        con = apex_odd_filter(n)
        g = con.sg.graph
        assert g.n == 2 * n + 1 and g.m == 4 * n
        assert g.degree(con.apex) == 2 * n
        # rim all parity one; apex edges: 1 on the even side and at b, else 0
        for u, v in g.edges:
            p = con.sg.parity(u, v)
            if con.apex in (u, v):
                other = u if v == con.apex else v
                expected = 1 if (other % 2 == 0 or other == con.special) else 0
                assert p == expected
            else:
                assert p == 1

    def test_n2_counts(self):
        con = apex_odd_filter(2)
        assert con.sg.graph.n == 5 and con.sg.graph.m == 8

    def test_three_connected_nonbipartite(self):
        for n in (2, 3, 4):
            con = apex_odd_filter(n)
            assert is_k_connected(con.sg.graph, 3)
            assert len(enumerate_cycles(con.sg, parity_filter=1)) > 0

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_all_odd_cycles_through_special_edge(self, n):
        con = apex_odd_filter(n)
        odd = enumerate_cycles(con.sg, parity_filter=1)
        assert all(con.special_edge in c.edge_set() for c in odd)
        assert len(odd) <= 2 * t_value(con.sg.graph)

    def test_bad_parameters(self):
        with pytest.raises(BadParametersError):
            apex_odd_filter(1)


class TestHajosJoin:
    def test_two_k4s(self):
        g = hajos_join(complete_graph(4), (0, 1), complete_graph(4), (0, 1))
        assert (g.n, g.m) == (7, 11)
        assert is_k_critical_bool(g, 4)

    def test_two_triangles_give_c5(self):
        g = hajos_join(cycle_graph(3), (0, 1), cycle_graph(3), (0, 1))
        assert are_isomorphic(g, cycle_graph(5))
        assert is_k_critical_bool(g, 3)

    def test_mismatched_k_not_certified(self):
        g = hajos_join(complete_graph(4), (0, 1), cycle_graph(5), (0, 1))
        assert not is_k_critical_bool(g, 4)
        assert not is_k_critical_bool(g, 3)

    def test_absent_edge(self):
        with pytest.raises(EdgeAbsentError):
            hajos_join(cycle_graph(4), (0, 2), cycle_graph(4), (0, 1))


class TestCorpus:
    def test_connected_counts(self):
        # OEIS A001349: connected graphs on n nodes
        expected = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}
        for n, count in expected.items():
            assert len(connected_graphs(n)) == count

    def test_four_critical_max4_is_k4(self):
        graphs = list(corpus(CorpusSpec(family="four-critical", max_n=4)))
        assert len(graphs) == 1
        assert are_isomorphic(graphs[0], complete_graph(4))

    def test_four_critical_max7(self):
        graphs = list(corpus(CorpusSpec(family="four-critical", max_n=7)))
        assert len(graphs) == 4  # K4, W(6,1), and two on 7 vertices
        assert any(are_isomorphic(g, wheel(6, 1).graph) for g in graphs)
        hj = hajos_join(complete_graph(4), (0, 1), complete_graph(4), (0, 1))
        assert any(are_isomorphic(g, hj) for g in graphs)

    def test_three_connected_nonbipartite_max5(self):
        graphs = list(corpus(CorpusSpec(family="three-connected-nonbipartite", max_n=5)))
        assert any(are_isomorphic(g, complete_graph(4)) for g in graphs)
        assert any(are_isomorphic(g, complete_graph(5)) for g in graphs)
        assert any(are_isomorphic(g, wheel(5, 1).graph) for g in graphs)
        for g in graphs:
            assert is_k_connected(g, 3)

    def test_k_critical_family(self):
        graphs = list(corpus(CorpusSpec(family="k-critical", max_n=5, k=3)))
        # 3-critical = odd cycles: C3 and C5
        assert len(graphs) == 2

    def test_k_critical_needs_k(self):
        with pytest.raises(BadParametersError):
            list(corpus(CorpusSpec(family="k-critical", max_n=4)))

    def test_unknown_family(self):
        with pytest.raises(BadParametersError):
            list(corpus(CorpusSpec(family="nope", max_n=4)))

    def test_scale_guard(self):
        with pytest.raises(ScaleGuardError):
            list(corpus(CorpusSpec(family="connected", max_n=11)))

    def test_duplicate_free_upto_7(self):
        forms = [
            canonical_form(g)
            for n in range(1, 8)
            for g in connected_graphs(n)
        ]
        assert len(forms) == len(set(forms))

    def test_stream_deterministic(self):
        a = list(corpus(CorpusSpec(family="three-connected-nonbipartite", max_n=6)))
        b = list(corpus(CorpusSpec(family="three-connected-nonbipartite", max_n=6)))
        assert a == b

    def test_graph6_source_roundtrip(self, tmp_path):
        path = tmp_path / "graphs.g6"
        with open(path, "w") as fh:
            write_graph6(fh, connected_graphs(5))
        graphs = list(
            corpus(CorpusSpec(family="four-critical", max_n=5, source=str(path)))
        )
        assert graphs == []  # no 4-critical graph on exactly 5 vertices
        graphs = list(
            corpus(CorpusSpec(family="connected", max_n=5, source=str(path)))
        )
        assert len(graphs) == 21


class TestIsoMachinery:
    def test_canonical_form_invariant_under_relabeling(self):
        g = wheel(6, 1).graph
        for perm in itertools.islice(itertools.permutations(range(6)), 0, 720, 31):
            h = g.relabeled(dict(enumerate(perm)))
            assert canonical_form(h) == canonical_form(g)

    def test_distinguishes_same_degree_sequence(self):
        # C6 versus two triangles: both 2-regular on 6 vertices
        two_triangles = complete_graph(3)
        g1 = cycle_graph(6)
        from critgraph.graph import Graph

        g2 = Graph(6, list(two_triangles.edges) + [(3, 4), (3, 5), (4, 5)])
        assert canonical_form(g1) != canonical_form(g2)
