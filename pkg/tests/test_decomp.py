import random

import networkx as nx
import pytest

from critgraph.cycles import enumerate_paths
from critgraph.decomp import (
    Block,
    block_path,
    block_tree,
    ear_decomposition,
    is_two_connected,
    t_additivity_check,
)
from critgraph.errors import (
    BadAnchorError,
    DisconnectedInputError,
    NotTwoConnectedError,
    SameVertexError,
)
from critgraph.graph import Graph, t_value
from critgraph.generators import (
    complete_graph,
    cycle_graph,
    path_graph,
    petersen,
    wheel,
)

from conftest import to_nx


def two_triangles_shared_vertex() -> Graph:
    return Graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


def triangle_chain(k: int) -> Graph:
    edges = []
    for i in range(k):
        b = 2 * i
        edges += [(b, b + 1), (b, b + 2), (b + 1, b + 2)]
    return Graph(2 * k + 1, edges)


def random_connected(rng: random.Random, n: int) -> Graph:
    edges = {(min(a, b), max(a, b)) for a in range(1, n) for b in [rng.randrange(a)]}
    extra = rng.randrange(0, n)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges.update(rng.sample(pairs, min(extra, len(pairs))))
    return Graph(n, edges)


class TestBlockTree:
    def test_k4_single_block(self):
        bt = block_tree(complete_graph(4))
        assert len(bt.blocks) == 1 and bt.cut_vertices == ()
        assert bt.blocks[0].vertices == (0, 1, 2, 3)

    def test_two_triangles(self):
        bt = block_tree(two_triangles_shared_vertex())
        assert len(bt.blocks) == 2
        assert bt.cut_vertices == (2,)
        assert bt.end_blocks() == (0, 1)

    def test_path_blocks(self):
        bt = block_tree(path_graph(4))
        assert len(bt.blocks) == 3
        assert all(b.is_edge for b in bt.blocks)
        assert bt.cut_vertices == (1, 2)
        assert len(bt.end_blocks()) == 2

    def test_single_vertex(self):
        bt = block_tree(Graph(1))
        assert bt.blocks[0].is_vertex

    def test_disconnected(self):
        with pytest.raises(DisconnectedInputError):
            block_tree(Graph(4, [(0, 1), (2, 3)]))

    def test_edges_partition(self):
        g = triangle_chain(3)
        bt = block_tree(g)
        all_edges = [e for b in bt.blocks for e in b.edges]
        assert sorted(all_edges) == list(g.edges)

    def test_matches_networkx(self):
        rng = random.Random(7)
        for _ in range(100):
            g = random_connected(rng, rng.randrange(2, 9))
            bt = block_tree(g)
            ours = {frozenset(b.edges) for b in bt.blocks if b.edges}
            theirs = {
                frozenset(tuple(sorted(e)) for e in comp)
                for comp in nx.biconnected_component_edges(to_nx(g))
            }
            assert ours == theirs
            assert set(bt.cut_vertices) == set(nx.articulation_points(to_nx(g)))


class TestTAdditivity:
    def test_two_triangles(self):
        assert t_additivity_check(two_triangles_shared_vertex()) == (2, [1, 1])

    def test_tree(self):
        total, parts = t_additivity_check(path_graph(5))
        assert total == 0 and all(p == 0 for p in parts)

    def test_k4_with_pendant_triangle(self):
        # K4 on 0-3 plus a triangle glued at vertex 0
        g = Graph(
            6,
            [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (0, 5), (4, 5)],
        )
        total, parts = t_additivity_check(g)
        assert total == 4 and sorted(parts) == [1, 3]

    def test_thousand_random_graphs(self):
        rng = random.Random(2024)
        for _ in range(1000):
            g = random_connected(rng, rng.randrange(1, 11))
            total, parts = t_additivity_check(g)
            assert total == sum(parts)


class TestBlockPath:
    def test_two_triangles_across(self):
        g = two_triangles_shared_vertex()
        path = block_path(g, 0, 4)
        assert len(path) == 3
        b1, c, b2 = path
        assert isinstance(b1, Block) and isinstance(b2, Block) and c == 2
        assert 0 in b1.vertices and 4 in b2.vertices

    def test_same_block(self):
        path = block_path(complete_graph(4), 1, 3)
        assert len(path) == 1

    def test_chain_of_three_triangles(self):
        g = triangle_chain(3)
        path = block_path(g, 0, 6)
        blocks = [p for p in path if isinstance(p, Block)]
        cuts = [p for p in path if not isinstance(p, Block)]
        assert len(blocks) == 3 and cuts == [2, 4]

    def test_same_vertex_raises(self):
        with pytest.raises(SameVertexError):
            block_path(complete_graph(4), 1, 1)


def check_ear_invariants(g: Graph, dec) -> None:
    assert len(dec) == t_value(g)
    seen = set()
    covered = set(dec.ears[0])
    for i, ear in enumerate(dec.ears):
        edges = dec.ear_edges(i)
        assert not (set(edges) & seen), "edge reused across ears"
        seen.update(edges)
        if i > 0:
            assert ear[0] in covered and ear[-1] in covered
            interior = ear[1:-1]
            assert all(v not in covered for v in interior)
            covered.update(ear)
    assert seen == set(g.edges)
    # every prefix union is 2-connected (single cycle included when n >= 3)
    for i in range(1, len(dec.ears) + 1):
        edges = [e for j in range(i) for e in dec.ear_edges(j)]
        vs = sorted({v for e in edges for v in e})
        idx = {v: k for k, v in enumerate(vs)}
        sub = Graph(len(vs), ((idx[u], idx[v]) for u, v in edges))
        assert is_two_connected(sub)


class TestEarDecomposition:
    def test_c5_single_ear(self):
        dec = ear_decomposition(cycle_graph(5))
        assert len(dec) == 1 and set(dec.ears[0]) == set(range(5))

    def test_k4(self):
        dec = ear_decomposition(complete_graph(4))
        check_ear_invariants(complete_graph(4), dec)
        assert len(dec) == 3

    def test_not_two_connected(self):
        with pytest.raises(NotTwoConnectedError):
            ear_decomposition(path_graph(4))
        with pytest.raises(NotTwoConnectedError):
            ear_decomposition(two_triangles_shared_vertex())

    def test_wheel_anchored_on_rim(self):
        w = wheel(6, 1)
        dec = ear_decomposition(w.graph, anchor=w.rim)
        check_ear_invariants(w.graph, dec)
        assert len(dec) == 5
        assert dec.ears[0] == w.rim
        hub = w.hub[0]
        for ear in dec.ears[1:]:
            assert hub in ear

    def test_anchored_invariants_hold(self):
        w = wheel(6, 1)
        dec = ear_decomposition(w.graph, anchor=w.rim)
        anchor = set(dec.anchor)
        for ear in dec.ears[2:]:
            assert ear[0] not in anchor or ear[-1] not in anchor

    def test_petersen_anchored(self):
        g = petersen()
        rim = (0, 1, 2, 3, 4)
        dec = ear_decomposition(g, anchor=rim)
        check_ear_invariants(g, dec)
        anchor = set(rim)
        for ear in dec.ears[2:]:
            assert ear[0] not in anchor or ear[-1] not in anchor
        # anchor stays non-separating in every prefix union
        for i in range(1, len(dec.ears) + 1):
            edges = [e for j in range(i) for e in dec.ear_edges(j)]
            off = sorted({v for e in edges for v in e} - anchor)
            if off:
                adj = {v: set() for v in off}
                for u, v in edges:
                    if u in adj and v in adj:
                        adj[u].add(v)
                        adj[v].add(u)
                stack, seen = [off[0]], {off[0]}
                while stack:
                    x = stack.pop()
                    for y in adj[x]:
                        if y not in seen:
                            seen.add(y)
                            stack.append(y)
                assert len(seen) == len(off)

    def test_bad_anchor_not_induced(self):
        w = wheel(6, 1)
        # 0-1-5 is a triangle but 5 is the hub: the cycle 0,1,5 is induced...
        # use a non-cycle sequence instead
        with pytest.raises(BadAnchorError):
            ear_decomposition(w.graph, anchor=(0, 1, 3))

    def test_bad_anchor_separating(self):
        # theta graph: anchor through the middle path separates? build a
        # graph where removing the anchor disconnects: two triangles sharing
        # an edge, anchored on the shared triangle is fine, but a 4-cycle
        # through both tips separates nothing; craft explicitly:
        g = Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (0, 3)])
        # anchor 0-2-3 is a cycle; removing it leaves {1, 4} with no edge
        with pytest.raises(BadAnchorError):
            ear_decomposition(g, anchor=(0, 2, 3))

    def test_every_two_connected_graph_upto_7(self, connected_upto_7):
        for g in connected_upto_7:
            if not is_two_connected(g):
                continue
            check_ear_invariants(g, ear_decomposition(g))


class TestBlockPathCountBound:
    def test_paths_in_blocks_beat_t_plus_one(self, connected_upto_7):
        # within every block, any two vertices are joined by >= t(B)+1 paths
        rng = random.Random(5)
        sample = [g for g in connected_upto_7 if g.n >= 3]
        for g in rng.sample(sample, 120):
            bt = block_tree(g)
            for b in bt.blocks:
                if len(b.vertices) < 2:
                    continue
                idx = {v: i for i, v in enumerate(b.vertices)}
                sub = Graph(len(b.vertices), ((idx[u], idx[v]) for u, v in b.edges))
                for i in range(sub.n):
                    for j in range(i + 1, sub.n):
                        assert len(enumerate_paths(sub, i, j)) >= b.t + 1
