"""Immutable simple graphs, signed graphs, and basic connectivity queries.

Vertices are dense integers 0..n-1 and edges are stored canonically as
(min, max) pairs, so derived structures (cycle edge sets, block edge sets)
have stable canonical forms. Instances are immutable after construction and
safe to share across concurrent workers.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import (
    DisconnectedInputError,
    TooSmallError,
)

Edge = tuple[int, int]


def canon_edge(u: int, v: int) -> Edge:
    """Return the edge as a (min, max) pair; loops are rejected."""
    if u == v:
        raise ValueError(f"loop at vertex {u} not allowed in a simple graph")
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Adjacency lists and per-vertex bitmasks are built eagerly at
    construction; all enumeration kernels read-share them.
    """

    __slots__ = ("n", "edges", "adj", "masks", "_hash")

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        canon = set()
        for u, v in edges:
            e = canon_edge(u, v)
            if not (0 <= e[0] and e[1] < n):
                raise ValueError(f"edge {e} has an endpoint outside [0, {n})")
            canon.add(e)
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(sorted(canon))
        adj: list[list[int]] = [[] for _ in range(n)]
        masks = [0] * n
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)
        self.masks: tuple[int, ...] = tuple(masks)
        self._hash = hash((n, self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1) if 0 <= u < self.n and 0 <= v < self.n else False

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = self._reach(0, 0)
        return seen.bit_count() == self.n

    def _reach(self, start: int, removed_mask: int) -> int:
        """Bitmask of vertices reachable from start, ignoring removed vertices."""
        if removed_mask >> start & 1:
            return 0
        seen = 1 << start
        stack = [start]
        while stack:
            v = stack.pop()
            new = self.masks[v] & ~seen & ~removed_mask
            while new:
                w = (new & -new).bit_length() - 1
                new &= new - 1
                seen |= 1 << w
                stack.append(w)
        return seen

    def components(self) -> list[tuple[int, ...]]:
        left = (1 << self.n) - 1
        out = []
        while left:
            start = (left & -left).bit_length() - 1
            comp = self._reach(start, ~left)
            out.append(tuple(v for v in range(self.n) if comp >> v & 1))
            left &= ~comp
        return out

    def connected_after_removal(self, removed: Iterable[int]) -> bool:
        """True if the graph minus the given vertices is connected (or empty)."""
        rm = 0
        for v in removed:
            rm |= 1 << v
        rest = [v for v in range(self.n) if not rm >> v & 1]
        if len(rest) <= 1:
            return True
        return self._reach(rest[0], rm).bit_count() == len(rest)

    def induced(self, keep: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph on the given vertices.

        Returns the relabeled graph and the tuple mapping new index -> old label.
        """
        labels = tuple(sorted(set(keep)))
        index = {old: i for i, old in enumerate(labels)}
        edges = [
            (index[u], index[v])
            for u, v in self.edges
            if u in index and v in index
        ]
        return Graph(len(labels), edges), labels

    def without_vertices(self, drop: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        gone = set(drop)
        return self.induced(v for v in range(self.n) if v not in gone)

    def remove_edge(self, u: int, v: int) -> "Graph":
        e = canon_edge(u, v)
        return Graph(self.n, (f for f in self.edges if f != e))

    def add_edge(self, u: int, v: int) -> "Graph":
        return Graph(self.n, self.edges + (canon_edge(u, v),))

    def relabeled(self, perm: Mapping[int, int] | list[int] | tuple[int, ...]) -> "Graph":
        """Relabel vertices; perm maps old label -> new label (a bijection)."""
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return self._hash

    def __reduce__(self):
        return (Graph, (self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


class SignedGraph:
    """Graph with an edge parity in {0, 1} on every edge.

    A path or cycle is odd when the mod-2 sum of its edge parities is 1.
    Plain graphs embed by assigning parity 1 to every edge, so that odd
    length and odd parity coincide.
    """

    __slots__ = ("graph", "parities", "_hash")

    def __init__(self, graph: Graph, parity: Mapping[Edge, int]):
        missing = [e for e in graph.edges if e not in parity]
        if missing:
            raise ValueError(f"parity missing for edges {missing[:3]}...")
        vals = {}
        for e in graph.edges:
            p = parity[e]
            if p not in (0, 1):
                raise ValueError(f"parity of {e} must be 0 or 1, got {p!r}")
            vals[e] = p
        self.graph = graph
        self.parities: dict[Edge, int] = vals
        self._hash = hash((graph, tuple(vals[e] for e in graph.edges)))

    @classmethod
    def lift(cls, graph: Graph, parity: int = 1) -> "SignedGraph":
        """Embed a plain graph with the same parity on every edge."""
        return cls(graph, {e: parity for e in graph.edges})

    @property
    def n(self) -> int:
        return self.graph.n

    def parity(self, u: int, v: int) -> int:
        return self.parities[canon_edge(u, v)]

    def edges_parity(self, edges: Iterable[Edge]) -> int:
        p = 0
        for u, v in edges:
            p ^= self.parities[canon_edge(u, v)]
        return p

    def walk_parity(self, vertices: Iterable[int]) -> int:
        seq = list(vertices)
        return self.edges_parity(zip(seq, seq[1:]))

    def induced(self, keep: Iterable[int]) -> tuple["SignedGraph", tuple[int, ...]]:
        sub, labels = self.graph.induced(keep)
        index = {old: i for i, old in enumerate(labels)}
        parity = {
            canon_edge(index[u], index[v]): self.parities[(u, v)]
            for u, v in self.graph.edges
            if u in index and v in index
        }
        return SignedGraph(sub, parity), labels

    def without_vertices(self, drop: Iterable[int]) -> tuple["SignedGraph", tuple[int, ...]]:
        gone = set(drop)
        return self.induced(v for v in range(self.n) if v not in gone)

    def __eq__(self, other):
        return (
            isinstance(other, SignedGraph)
            and self.graph == other.graph
            and self.parities == other.parities
        )

    def __hash__(self):
        return self._hash

    def __reduce__(self):
        return (SignedGraph, (self.graph, self.parities))

    def __repr__(self):
        odd = sum(self.parities.values())
        return f"SignedGraph(n={self.n}, m={self.graph.m}, odd_edges={odd})"


@dataclass(frozen=True)
class VertexCut:
    """A set of vertices whose removal strictly increases the component count."""

    vertices: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.vertices)


def as_signed(g: Graph | SignedGraph) -> SignedGraph:
    return g if isinstance(g, SignedGraph) else SignedGraph.lift(g)


def t_value(g: Graph) -> int:
    """The cycle-space rank |E| - |V| + 1 of a connected graph."""
    if not g.is_connected():
        raise DisconnectedInputError(
            "t is defined here for connected graphs; decompose per component first"
        )
    return g.m - g.n + 1


def _local_connectivity(g: Graph, s: int, t: int, cap: int | None = None) -> int:
    """Max number of internally disjoint s-t paths for non-adjacent s, t.

    Unit-capacity max flow on the vertex-split digraph, BFS augmentation.
    Stops early once `cap` paths are found.
    """
    n = g.n
    # node ids: v_in = 2v, v_out = 2v+1; s, t are not split
    src, snk = 2 * s + 1, 2 * t
    capacity: dict[tuple[int, int], int] = {}

    def add(a, b):
        capacity[(a, b)] = capacity.get((a, b), 0) + 1
        capacity.setdefault((b, a), 0)

    for v in range(n):
        if v != s and v != t:
            add(2 * v, 2 * v + 1)
    for u, v in g.edges:
        add(2 * u + 1, 2 * v)
        add(2 * v + 1, 2 * u)
    neigh: dict[int, list[int]] = {}
    for a, b in capacity:
        neigh.setdefault(a, []).append(b)

    flow = 0
    while cap is None or flow < cap:
        # BFS for an augmenting path
        prev = {src: src}
        q = deque([src])
        while q and snk not in prev:
            a = q.popleft()
            for b in neigh.get(a, ()):
                if b not in prev and capacity[(a, b)] > 0:
                    prev[b] = a
                    q.append(b)
        if snk not in prev:
            break
        b = snk
        while b != src:
            a = prev[b]
            capacity[(a, b)] -= 1
            capacity[(b, a)] += 1
            b = a
        flow += 1
    return flow


def connectivity(g: Graph, cap: int | None = None) -> int:
    """Exact vertex connectivity; 0 when disconnected.

    All-pairs max-flow over non-adjacent pairs; fine at desk scale. With
    `cap` set, returns min(connectivity, cap) and stops flows early.
    """
    if g.n < 2:
        raise TooSmallError("connectivity needs at least 2 vertices")
    if not g.is_connected():
        return 0
    full = g.n * (g.n - 1) // 2
    if g.m == full:
        k = g.n - 1
        return k if cap is None else min(k, cap)
    best = g.n - 1
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v):
                continue
            local_cap = best if cap is None else min(best, cap)
            best = min(best, _local_connectivity(g, u, v, cap=local_cap + 1))
            if cap is not None and best <= 0:
                return 0
    return best if cap is None else min(best, cap)


def is_k_connected(g: Graph, k: int) -> bool:
    """True if vertex connectivity is at least k (early-terminating flows)."""
    if g.n <= k:
        return False
    if min(g.degrees(), default=0) < k:
        return False
    return connectivity(g, cap=k) >= k


def two_cuts(g: Graph) -> list[VertexCut]:
    """All unordered vertex pairs whose removal disconnects the graph.

    Empty exactly when the graph is 3-connected.
    """
    if g.n < 4:
        raise TooSmallError("two_cuts needs at least 4 vertices")
    if not g.is_connected():
        raise DisconnectedInputError("two_cuts expects a connected graph")
    cuts = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.connected_after_removal((u, v)):
                cuts.append(VertexCut((u, v)))
    return cuts


def is_bipartite_signed(sg: SignedGraph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Bipartition (A, B) with odd edges exactly the crossing ones, if one exists.

    Present iff every cycle has even parity. Computed per component by
    parity-BFS; isolated vertices land in A.
    """
    g = sg.graph
    side = [-1] * g.n
    for start in range(g.n):
        if side[start] != -1:
            continue
        side[start] = 0
        q = deque([start])
        while q:
            v = q.popleft()
            for w in g.neighbors(v):
                want = side[v] ^ sg.parity(v, w)
                if side[w] == -1:
                    side[w] = want
                    q.append(w)
                elif side[w] != want:
                    return None
    a = tuple(v for v in range(g.n) if side[v] == 0)
    b = tuple(v for v in range(g.n) if side[v] == 1)
    return a, b


def is_bipartite(g: Graph) -> bool:
    """Plain 2-colorability (no odd-length cycle)."""
    return is_bipartite_signed(SignedGraph.lift(g)) is not None


def is_nonbipartite_signed(sg: SignedGraph) -> bool:
    return is_bipartite_signed(sg) is None


def iter_pairs(n: int) -> Iterator[tuple[int, int]]:
    for u in range(n):
        for v in range(u + 1, n):
            yield u, v
