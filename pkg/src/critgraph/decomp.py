"""Block-cut-tree machinery and ear decompositions.

Ear decompositions can be anchored on a prescribed induced non-separating
cycle; anchored decompositions keep the anchor non-separating in every
prefix and give every ear after the second an endpoint off the anchor.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    BadAnchorError,
    DisconnectedInputError,
    NotTwoConnectedError,
    SameVertexError,
)
from .graph import Edge, Graph, canon_edge, t_value


@dataclass(frozen=True)
class Block:
    """A block: isolated vertex, single edge, or maximal 2-connected subgraph."""

    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]

    @property
    def is_vertex(self) -> bool:
        return not self.edges

    @property
    def is_edge(self) -> bool:
        return len(self.edges) == 1

    @property
    def t(self) -> int:
        return len(self.edges) - len(self.vertices) + 1


@dataclass(frozen=True)
class BlockTree:
    """Blocks, cut vertices, and their bipartite incidence."""

    blocks: tuple[Block, ...]
    cut_vertices: tuple[int, ...]
    incidence: tuple[tuple[int, int], ...]  # (block index, cut vertex)

    def end_blocks(self) -> tuple[int, ...]:
        """Indices of blocks incident to at most one cut vertex."""
        deg = {i: 0 for i in range(len(self.blocks))}
        for bi, _ in self.incidence:
            deg[bi] += 1
        return tuple(i for i in range(len(self.blocks)) if deg[i] <= 1)

    def blocks_containing(self, v: int) -> tuple[int, ...]:
        return tuple(i for i, b in enumerate(self.blocks) if v in b.vertices)

    def cut_vertices_of(self, block_index: int) -> tuple[int, ...]:
        return tuple(c for bi, c in self.incidence if bi == block_index)


def block_tree(g: Graph) -> BlockTree:
    """Decompose a connected graph into blocks and cut vertices (lowpoint DFS)."""
    if not g.is_connected():
        raise DisconnectedInputError("block_tree expects a connected graph")
    n = g.n
    if n == 0:
        return BlockTree((), (), ())
    if n == 1:
        return BlockTree((Block((0,), ()),), (), ())

    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    is_cut = [False] * n
    estack: list[Edge] = []
    block_edges: list[list[Edge]] = []
    timer = 0

    # iterative DFS; (vertex, neighbor-iterator index) frames
    root = 0
    stack = [(root, 0)]
    disc[root] = low[root] = timer
    timer += 1
    root_children = 0
    while stack:
        v, i = stack[-1]
        if i < len(g.adj[v]):
            stack[-1] = (v, i + 1)
            w = g.adj[v][i]
            if disc[w] == -1:
                parent[w] = v
                disc[w] = low[w] = timer
                timer += 1
                estack.append(canon_edge(v, w))
                stack.append((w, 0))
                if v == root:
                    root_children += 1
            elif w != parent[v] and disc[w] < disc[v]:
                estack.append(canon_edge(v, w))
                low[v] = min(low[v], disc[w])
        else:
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    if u != root or root_children > 1:
                        is_cut[u] = True
                    comp = []
                    mark = canon_edge(u, v)
                    while True:
                        e = estack.pop()
                        comp.append(e)
                        if e == mark:
                            break
                    block_edges.append(comp)
    if estack:
        block_edges.append(list(estack))

    blocks = []
    for comp in block_edges:
        vs = sorted({x for e in comp for x in e})
        blocks.append(Block(tuple(vs), tuple(sorted(comp))))
    blocks.sort(key=lambda b: (b.vertices, b.edges))
    cuts = tuple(v for v in range(n) if is_cut[v])
    incidence = tuple(
        (i, c) for i, b in enumerate(blocks) for c in cuts if c in b.vertices
    )
    return BlockTree(tuple(blocks), cuts, incidence)


def t_additivity_check(g: Graph) -> tuple[int, list[int]]:
    """t of the whole graph alongside per-block t values; the sum always matches."""
    total = t_value(g)
    parts = [b.t for b in block_tree(g).blocks]
    if total != sum(parts):
        raise AssertionError(
            f"block t values {parts} do not sum to t(G)={total}; decomposition bug"
        )
    return total, parts


def block_path(g: Graph, a: int, b: int) -> list[Block | int]:
    """Shortest alternating block/cut-vertex path from a's block to b's block."""
    if a == b:
        raise SameVertexError("block_path needs two distinct vertices")
    bt = block_tree(g)
    starts = bt.blocks_containing(a)
    goals = set(bt.blocks_containing(b))
    # BFS over the bipartite incidence structure; nodes ('B', i) and ('C', v).
    adj: dict[tuple[str, int], list[tuple[str, int]]] = {}
    for bi, c in bt.incidence:
        adj.setdefault(("B", bi), []).append(("C", c))
        adj.setdefault(("C", c), []).append(("B", bi))
    for node in adj:
        adj[node].sort()
    prev: dict[tuple[str, int], tuple[str, int] | None] = {}
    q: deque[tuple[str, int]] = deque()
    for bi in starts:
        prev[("B", bi)] = None
        q.append(("B", bi))
    found = None
    while q:
        node = q.popleft()
        if node[0] == "B" and node[1] in goals:
            found = node
            break
        for nxt in adj.get(node, ()):
            if nxt not in prev:
                prev[nxt] = node
                q.append(nxt)
    if found is None:
        raise DisconnectedInputError("no block path; graph must be connected")
    rev = []
    node: tuple[str, int] | None = found
    while node is not None:
        rev.append(node)
        node = prev[node]
    rev.reverse()
    return [bt.blocks[i] if kind == "B" else i for kind, i in rev]


def is_two_connected(g: Graph) -> bool:
    if g.n < 3 or not g.is_connected():
        return False
    return not block_tree(g).cut_vertices


@dataclass(frozen=True)
class EarDecomposition:
    """Ordered ears: ears[0] is a cycle (closed implicitly), the rest are paths.

    Each later ear meets the union of earlier ears exactly in its two
    endpoints. When anchored, ears[0] is the prescribed cycle.
    """

    ears: tuple[tuple[int, ...], ...]
    anchor: tuple[int, ...] | None = None

    def ear_edges(self, i: int) -> list[Edge]:
        seq = self.ears[i]
        edges = [canon_edge(u, v) for u, v in zip(seq, seq[1:])]
        if i == 0:
            edges.append(canon_edge(seq[-1], seq[0]))
        return edges

    def all_edges(self) -> list[Edge]:
        out = []
        for i in range(len(self.ears)):
            out.extend(self.ear_edges(i))
        return out

    def __len__(self) -> int:
        return len(self.ears)


def validate_cycle(g: Graph, cycle: Sequence[int]) -> tuple[int, ...]:
    """Check the vertex sequence is a simple cycle of g; returns it as a tuple."""
    seq = tuple(cycle)
    if len(seq) < 3 or len(set(seq)) != len(seq):
        raise BadAnchorError(f"not a simple cycle: {seq}")
    for u, v in zip(seq, seq[1:] + seq[:1]):
        if not g.has_edge(u, v):
            raise BadAnchorError(f"cycle edge ({u}, {v}) missing from graph")
    return seq


def _is_induced_cycle(g: Graph, seq: tuple[int, ...]) -> bool:
    inside = set(seq)
    count = sum(1 for u, v in g.edges if u in inside and v in inside)
    return count == len(seq)


def _find_cycle(g: Graph) -> tuple[int, ...]:
    """Deterministic cycle through vertex 0 of a 2-connected graph."""
    a = g.adj[0][0]
    blocked = canon_edge(0, a)
    prev = {a: a}
    q = deque([a])
    while q:
        v = q.popleft()
        if v == 0:
            break
        for w in g.adj[v]:
            if canon_edge(v, w) == blocked or w in prev:
                continue
            prev[w] = v
            q.append(w)
    if 0 not in prev:
        raise NotTwoConnectedError("no cycle through vertex 0")
    path = [0]
    v = prev[0]
    while v != a:
        path.append(v)
        v = prev[v]
    path.append(a)
    return tuple(reversed(path))


def _find_ear(
    g: Graph,
    prefix: set[int],
    used: set[Edge],
    anchor: set[int] | None,
) -> tuple[int, ...]:
    """Next ear attached to the prefix, endpoints in prefix, internals outside.

    With an anchor given, only ears with at least one endpoint off the
    anchor are acceptable (an ear between two anchor vertices would make
    the anchor separating in the prefix union).
    """
    starts = sorted(
        v for v in prefix if any(canon_edge(v, w) not in used for w in g.adj[v])
    )
    if anchor is not None:
        starts.sort(key=lambda v: (v in anchor, v))
    for s in starts:
        for w in g.adj[s]:
            if canon_edge(s, w) in used:
                continue
            if w in prefix:
                if w == s:
                    continue
                if anchor is not None and s in anchor and w in anchor:
                    continue  # cannot happen for induced anchors; skip defensively
                return (s, w)
            # walk outside the prefix until it is hit again
            targets = prefix - {s}
            if anchor is not None and s in anchor:
                targets -= anchor
            prev = {w: s}
            q = deque([w])
            end = None
            while q and end is None:
                v = q.popleft()
                for x in sorted(g.adj[v]):
                    if x in prev:
                        continue
                    if x in targets:
                        prev[x] = v
                        end = x
                        break
                    if x not in prefix:
                        prev[x] = v
                        q.append(x)
            if end is None:
                continue
            path = [end]
            v = prev[end]
            while v != s:
                path.append(v)
                v = prev[v]
            path.append(s)
            return tuple(reversed(path))
    raise RuntimeError(
        "ear search exhausted; this contradicts the ear-existence guarantee "
        "for 2-connected graphs"
    )


def ear_decomposition(g: Graph, anchor: Sequence[int] | None = None) -> EarDecomposition:
    """Ear decomposition of a 2-connected graph; t(g) ears, first one a cycle.

    With `anchor` given (an induced cycle whose removal leaves the graph
    connected), the first ear is the anchor, every ear from the third on
    has an endpoint off the anchor, and the anchor stays non-separating in
    every prefix union. The output is not canonical; callers should assert
    invariants, never exact ear lists.
    """
    if not is_two_connected(g):
        raise NotTwoConnectedError("ear decomposition needs a 2-connected graph")
    anchor_set: set[int] | None = None
    if anchor is not None:
        first = validate_cycle(g, anchor)
        if not _is_induced_cycle(g, first):
            raise BadAnchorError("anchor cycle is not induced")
        if not g.connected_after_removal(first):
            raise BadAnchorError("anchor cycle separates the graph")
        anchor_set = set(first)
    else:
        first = _find_cycle(g)

    ears: list[tuple[int, ...]] = [first]
    prefix = set(first)
    used: set[Edge] = {canon_edge(u, v) for u, v in zip(first, first[1:] + first[:1])}

    while len(used) < g.m:
        constraint = anchor_set if (anchor_set is not None and len(ears) >= 2) else None
        ear = _find_ear(g, prefix, used, constraint)
        ears.append(ear)
        prefix.update(ear)
        used.update(canon_edge(u, v) for u, v in zip(ear, ear[1:]))
        if anchor_set is not None:
            off = [v for v in prefix if v not in anchor_set]
            if off and not _prefix_rest_connected(g, used, off):
                raise RuntimeError("anchor became separating in a prefix union")

    if len(ears) != t_value(g):
        raise AssertionError(
            f"built {len(ears)} ears but t(g) = {t_value(g)}; construction bug"
        )
    return EarDecomposition(tuple(ears), tuple(first) if anchor_set is not None else None)


def _prefix_rest_connected(g: Graph, used: set[Edge], off: list[int]) -> bool:
    """Is the off-anchor part of the prefix union connected (using used edges)?"""
    offset = set(off)
    adj: dict[int, list[int]] = {v: [] for v in off}
    for u, v in used:
        if u in offset and v in offset:
            adj[u].append(v)
            adj[v].append(u)
    seen = {off[0]}
    q = deque([off[0]])
    while q:
        v = q.popleft()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                q.append(w)
    return len(seen) == len(off)
