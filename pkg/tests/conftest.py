"""Shared fixtures and independent oracles for the test suite.

networkx serves as the out-of-package oracle wherever a derived value needs
a second route; the in-package reference enumerator covers the rest.
"""

from __future__ import annotations

import itertools

import networkx as nx
import pytest

from critgraph.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def from_nx(h: nx.Graph) -> Graph:
    nodes = sorted(h.nodes)
    idx = {v: i for i, v in enumerate(nodes)}
    return Graph(len(nodes), ((idx[u], idx[v]) for u, v in h.edges))


def nx_cycle_edge_sets(g: Graph) -> set[frozenset]:
    out = set()
    for cyc in nx.simple_cycles(to_nx(g)):
        if len(cyc) >= 3:
            out.add(
                frozenset(
                    tuple(sorted(e)) for e in zip(cyc, cyc[1:] + cyc[:1])
                )
            )
    return out


def chi_brute(g: Graph, cmax: int = 6) -> int:
    """Chromatic number by trying every assignment; tiny graphs only."""
    if g.n == 0:
        return 0
    if g.m == 0:
        return 1
    for c in range(1, cmax + 1):
        for ass in itertools.product(range(c), repeat=g.n):
            if all(ass[u] != ass[v] for u, v in g.edges):
                return c
    raise AssertionError(f"chromatic number above {cmax}")


def glued_k4s() -> Graph:
    """Two K4s sharing the non-adjacent pair {0,1}: the edge 0-1 is absent."""
    edges = set()
    for quad in ((0, 1, 2, 3), (0, 1, 4, 5)):
        edges.update(
            tuple(sorted(p)) for p in itertools.combinations(quad, 2)
        )
    edges.discard((0, 1))
    return Graph(6, edges)


@pytest.fixture(scope="session")
def connected_upto_7():
    from critgraph.generators import connected_graphs

    return [g for n in range(1, 8) for g in connected_graphs(n)]


@pytest.fixture(scope="session")
def four_critical_upto_8():
    from critgraph.generators import CorpusSpec, connected_graphs, corpus

    for n in range(1, 9):
        connected_graphs(n)
    return list(corpus(CorpusSpec(family="four-critical", max_n=8)))


@pytest.fixture(scope="session")
def three_connected_nonbip_upto_7():
    from critgraph.generators import CorpusSpec, corpus

    return list(corpus(CorpusSpec(family="three-connected-nonbipartite", max_n=7)))
