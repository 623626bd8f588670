from math import comb, isqrt

import pytest

from critgraph.critical import (
    chromatic_number,
    contract_pair,
    f_s_count,
    gallai_family,
    is_k_critical,
    is_k_critical_bool,
    two_cut_split,
)
from critgraph.errors import (
    BadParametersError,
    NoTwoCutError,
    NotCriticalError,
)
from critgraph.generators import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    hajos_join,
    petersen,
    wheel,
)
from critgraph.graph import Graph, t_value

from conftest import chi_brute


def hajos_two_k4s() -> Graph:
    return hajos_join(complete_graph(4), (0, 1), complete_graph(4), (0, 1))


class TestChromaticNumber:
    @pytest.mark.parametrize(
        "g,chi",
        [
            (complete_graph(4), 4),
            (cycle_graph(5), 3),
            (cycle_graph(6), 2),
            (petersen(), 3),
            (complete_bipartite(3, 4), 2),
            (Graph(3), 1),
            (wheel(6, 1).graph, 4),
        ],
    )
    def test_known_values(self, g, chi):
        assert chromatic_number(g) == chi

    def test_against_brute_force(self, connected_upto_7):
        for g in connected_upto_7[:120]:
            if g.n <= 6:
                assert chromatic_number(g) == chi_brute(g)


class TestCriticality:
    def test_k4(self):
        cert = is_k_critical(complete_graph(4), 4)
        assert cert is not None and cert.min_degree_ok
        assert len(cert.colorings) == 6

    def test_odd_cycles_are_3_critical(self):
        for n in (3, 5, 7, 9):
            assert is_k_critical(cycle_graph(n), 3) is not None
        for n in (4, 6, 8):
            assert is_k_critical(cycle_graph(n), 3) is None

    def test_even_wheel_not_4_critical(self):
        assert is_k_critical(wheel(7, 1).graph, 4) is None

    def test_odd_wheels_4_critical(self):
        for n in (4, 6, 8):
            assert is_k_critical(wheel(n, 1).graph, 4) is not None

    def test_k5_not_4_critical(self):
        assert is_k_critical(complete_graph(5), 4) is None

    def test_k_below_3_rejected(self):
        with pytest.raises(BadParametersError):
            is_k_critical(complete_graph(3), 2)

    def test_certificate_colorings_are_proper(self):
        g = wheel(6, 1).graph
        cert = is_k_critical(g, 4)
        for e, coloring in cert.colorings.items():
            h = g.remove_edge(*e)
            assert max(coloring) <= 2
            assert all(coloring[u] != coloring[v] for u, v in h.edges)


class TestGallaiFamily:
    def test_k4_family_is_the_four_triangles(self):
        fam = gallai_family(complete_graph(4), 4)
        assert fam.size == 4
        assert all(len(m) == 3 for m in fam.members)
        assert fam.lists_distinct and fam.miss_claim_holds
        assert not fam.degenerate
        # binomial consequence: C(4, 2) = 6 >= e(K4) = 6
        assert comb(fam.size, 2) >= 6

    def test_c5_degenerate_k3(self):
        fam = gallai_family(cycle_graph(5), 3)
        assert fam.degenerate
        assert fam.lists_distinct
        # each L(e) is one 2-critical subgraph: the edge e itself
        for e, members in fam.per_edge.items():
            assert len(members) == 1
            assert members[0] == frozenset([e])

    def test_hajos_join_bound(self):
        g = hajos_two_k4s()
        fam = gallai_family(g, 4)
        # family size must reach the general lower bound ((k-1)! n / 2)^(1/(k-2))
        assert fam.size >= isqrt(3 * 2 * 1 * g.n // 2)
        assert fam.lists_distinct and fam.miss_claim_holds
        for members in fam.per_edge.values():
            assert len(members) == 2

    def test_members_are_critical_subgraphs(self):
        g = wheel(6, 1).graph
        fam = gallai_family(g, 4)
        edge_set = set(g.edges)
        for member in fam.members:
            assert member <= edge_set
            vs = sorted({x for e in member for x in e})
            idx = {v: i for i, v in enumerate(vs)}
            sub = Graph(len(vs), ((idx[u], idx[v]) for u, v in member))
            assert is_k_critical_bool(sub, 3)

    def test_not_critical_raises(self):
        with pytest.raises(NotCriticalError):
            gallai_family(complete_graph(5), 4)


class TestFsCount:
    def test_f3_is_odd_cycles(self):
        assert f_s_count(complete_graph(4), 3) == 4
        assert f_s_count(complete_bipartite(3, 3), 3) == 0

    def test_f4_k5(self):
        # the five K4 subgraphs; K4 is the only 4-critical graph on <= 4 vertices
        assert f_s_count(complete_graph(5), 4) == 5

    def test_f4_of_4_critical_is_one(self):
        for g in (complete_graph(4), wheel(6, 1).graph, hajos_two_k4s()):
            assert f_s_count(g, 4) == 1

    def test_s_too_small(self):
        with pytest.raises(BadParametersError):
            f_s_count(complete_graph(4), 2)


class TestContractPair:
    def test_path_ends_close_to_triangle(self):
        from critgraph.generators import path_graph

        h = contract_pair(path_graph(4), 0, 3)
        assert h.n == 3 and h.m == 3

    def test_common_neighbor_rejected(self):
        with pytest.raises(BadParametersError):
            contract_pair(cycle_graph(4), 1, 3)  # share neighbors 0 and 2


class TestTwoCutSplit:
    def test_hajos_join_certifies(self):
        g = hajos_two_k4s()
        split = two_cut_split(g, 4)
        assert split.ok, split.checks
        assert split.case in (1, 2)
        assert not g.has_edge(*split.cut)
        assert is_k_critical_bool(split.h1, 4)
        assert is_k_critical_bool(split.h2, 4)
        assert t_value(split.h1) + t_value(split.h2) == t_value(g) + 1

    def test_every_cut_of_hajos_join(self):
        g = hajos_two_k4s()
        from critgraph.graph import two_cuts

        for cut in two_cuts(g):
            split = two_cut_split(g, 4, cut.vertices)
            assert split.ok, (cut, split.checks)

    def test_k4_has_no_cut(self):
        with pytest.raises(NoTwoCutError):
            two_cut_split(complete_graph(4), 4)

    def test_not_critical(self):
        with pytest.raises(NotCriticalError):
            two_cut_split(cycle_graph(6), 4)

    def test_parity_path_claim(self):
        split = two_cut_split(hajos_two_k4s(), 4)
        assert split.checks["side1_paths_both_parities"]
        assert split.checks["side2_paths_both_parities"]
