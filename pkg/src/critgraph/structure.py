"""Anchored-cycle instances: good pairs, good paths, basic cycles, staples.

An instance fixes an induced odd cycle C whose removal leaves a connected
remainder H. Cross edges E(C, H) pair up into good pairs (distinct C ends);
each simple path in H between the pair's H ends closes to exactly one odd
cycle and one even cycle through an arc of C. These counts carry the
package's main lower bounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Sequence

from .cycles import (
    Cycle,
    CycleSet,
    PathSet,
    enumerate_paths,
    get_budget,
    make_cycle,
    nonseparating_induced_odd_cycle,
)
from .decomp import Block, block_path, block_tree, validate_cycle
from .errors import (
    BadAnchorError,
    BudgetExceededError,
    HypothesisViolatedError,
    SameVertexError,
)
from .graph import (
    Edge,
    Graph,
    SignedGraph,
    as_signed,
    canon_edge,
    is_bipartite_signed,
    is_k_connected,
    t_value,
)


class AnchoredInstance:
    """A 3-connected non-bipartite signed host split along an anchor cycle."""

    def __init__(self, host: SignedGraph, anchor: Cycle):
        self.host = host
        self.anchor = anchor
        self.anchor_vertices: tuple[int, ...] = anchor.vertices
        anchor_set = set(anchor.vertices)
        self.h, self.h_labels = host.without_vertices(anchor_set)
        self.h_index = {old: i for i, old in enumerate(self.h_labels)}
        cross = []
        for u, v in host.graph.edges:
            if (u in anchor_set) != (v in anchor_set):
                c, a = (u, v) if u in anchor_set else (v, u)
                cross.append((c, a))
        self.cross: tuple[tuple[int, int], ...] = tuple(sorted(cross))
        self.m = len(self.cross)
        self.t = self.h.graph.m - self.h.graph.n + 1
        if t_value(host.graph) != self.t + self.m:
            raise AssertionError("t(host) != t(H) + |E(C,H)|; instance is corrupt")

    def arc_edges(self, x: int, y: int) -> tuple[list[Edge], list[Edge]]:
        """The two edge lists of the (x, y)-arcs along the anchor."""
        seq = self.anchor_vertices
        i, j = sorted((seq.index(x), seq.index(y)))
        fwd = [canon_edge(seq[k], seq[k + 1]) for k in range(i, j)]
        rest = []
        k = j
        while k != i:
            nxt = (k + 1) % len(seq)
            rest.append(canon_edge(seq[k], seq[nxt]))
            k = nxt
        return fwd, rest

    def __repr__(self):
        return (
            f"AnchoredInstance(anchor={self.anchor_vertices}, "
            f"m={self.m}, t={self.t})"
        )


def build_anchored(
    sg: SignedGraph | Graph, anchor: Sequence[int] | Cycle | None = None
) -> AnchoredInstance:
    """Instance with the given anchor (validated) or a searched one."""
    sg = as_signed(sg)
    if not is_k_connected(sg.graph, 3):
        raise HypothesisViolatedError("host must be 3-connected")
    if is_bipartite_signed(sg) is not None:
        raise HypothesisViolatedError("host must be non-bipartite")
    if anchor is None:
        cyc = nonseparating_induced_odd_cycle(sg, check=True)
    else:
        vs = anchor.vertices if isinstance(anchor, Cycle) else tuple(anchor)
        seq = validate_cycle(sg.graph, vs)
        cyc = make_cycle(sg, seq)
        if cyc.parity != 1:
            raise BadAnchorError("anchor cycle has even parity")
        inside = set(seq)
        inner = sum(1 for u, v in sg.graph.edges if u in inside and v in inside)
        if inner != len(seq):
            raise BadAnchorError("anchor cycle is not induced")
        if not sg.graph.connected_after_removal(seq):
            raise BadAnchorError("anchor cycle separates the host")
    return AnchoredInstance(sg, cyc)


@dataclass(frozen=True)
class GoodPair:
    """Two cross edges whose anchor endpoints differ."""

    edges: tuple[Edge, Edge]  # ((x, a), (y, b)) in host labels, sorted

    @property
    def anchor_ends(self) -> tuple[int, int]:
        return self.edges[0][0], self.edges[1][0]

    @property
    def h_ends(self) -> tuple[int, int]:
        return self.edges[0][1], self.edges[1][1]


def good_pairs(inst: AnchoredInstance) -> list[GoodPair]:
    out = []
    cross = inst.cross
    for i in range(len(cross)):
        for j in range(i + 1, len(cross)):
            if cross[i][0] != cross[j][0]:
                out.append(GoodPair((cross[i], cross[j])))
    return out


@dataclass(frozen=True)
class BasicCycles:
    """Odd completions (the basic cycles) and their even shadows."""

    odd: CycleSet
    even: CycleSet


def basic_cycles(inst: AnchoredInstance, budget: int | None = None) -> BasicCycles:
    """Every good pair plus every good path, closed through the parity-correct
    arc of the anchor; the even completions are collected separately."""
    cap = get_budget(budget)
    host = inst.host
    # paths in H depend only on the endpoint pair; compute each once
    path_cache: dict[tuple[int, int], list[tuple[tuple[int, ...], int]]] = {}

    def h_paths(a: int, b: int):
        key = (a, b) if a <= b else (b, a)
        if key not in path_cache:
            if key[0] == key[1]:
                path_cache[key] = [((key[0],), 0)]
            else:
                ps = enumerate_paths(
                    inst.h, inst.h_index[key[0]], inst.h_index[key[1]], budget=cap
                )
                path_cache[key] = [
                    (tuple(inst.h_labels[v] for v in p.vertices), p.parity)
                    for p in ps
                ]
        return path_cache[key]

    odd: dict[tuple[Edge, ...], Cycle] = {}
    even: dict[tuple[Edge, ...], Cycle] = {}
    for pair in good_pairs(inst):
        (x, a), (y, b) = pair.edges
        base_parity = host.parity(x, a) ^ host.parity(y, b)
        for path_vertices, path_parity in h_paths(a, b):
            if path_vertices[0] != a:
                path_vertices = tuple(reversed(path_vertices))
            arcs = inst.arc_edges(x, y)
            for arc in arcs:
                arc_parity = host.edges_parity(arc)
                total = base_parity ^ path_parity ^ arc_parity
                # cycle: x - a ...path... b - y - arc back to x
                seq = (x,) + path_vertices + (y,) + _arc_interior(arc, y, x)
                cyc = make_cycle(host, seq)
                target = odd if total == 1 else even
                target[cyc.edges] = cyc
                if len(odd) + len(even) > cap:
                    raise BudgetExceededError(
                        f"basic-cycle enumeration exceeded budget {cap}"
                    )
    odd_set = CycleSet(tuple(sorted(odd.values(), key=Cycle.sort_key)))
    even_set = CycleSet(tuple(sorted(even.values(), key=Cycle.sort_key)))
    return BasicCycles(odd=odd_set, even=even_set)


def _arc_interior(arc: list[Edge], start: int, end: int) -> tuple[int, ...]:
    """Interior vertex sequence of an arc walked from start to end."""
    if not arc:
        return ()
    adj: dict[int, list[int]] = {}
    for u, v in arc:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    seq = []
    prev, cur = None, start
    while cur != end:
        nxts = [w for w in adj[cur] if w != prev]
        prev, cur = cur, nxts[0]
        if cur != end:
            seq.append(cur)
    return tuple(seq)


@dataclass(frozen=True)
class StapleEntry:
    block_vertices: tuple[int, ...]  # host labels
    cut_vertex: int | None
    e: Edge
    f: Edge


@dataclass(frozen=True)
class StapleAssignment:
    entries: tuple[StapleEntry, ...]

    @property
    def end_block_count(self) -> int:
        return len(self.entries)


def staple_edges(inst: AnchoredInstance) -> StapleAssignment:
    """One deterministic staple pair per end-block of H.

    H must be connected but not 2-connected. For an edge block a-c the two
    staples share the outer vertex a; otherwise they are independent.
    Existence follows from the host's 3-connectivity, so exhaustion of the
    candidate search is an internal error, not a user one.
    """
    h = inst.h.graph
    bt = block_tree(h)
    # anchor neighbors per H vertex, keyed by H labels throughout
    cross_by_h: dict[int, list[int]] = {}
    for c, a in inst.cross:
        cross_by_h.setdefault(inst.h_index[a], []).append(c)
    for v in cross_by_h:
        cross_by_h[v].sort()

    if len(bt.blocks) == 1:
        only = bt.blocks[0]
        if only.is_edge:
            # degenerate single-edge H: both endpoints act as the outer vertex
            a_h, c_h = only.vertices
            entries = [
                _edge_block_staple(inst, cross_by_h, a_h, c_h),
                _edge_block_staple(inst, cross_by_h, c_h, a_h),
            ]
            return StapleAssignment(tuple(entries))
        raise HypothesisViolatedError(
            "H is 2-connected or a single vertex; staples need end-blocks"
        )

    entries = []
    for bi in bt.end_blocks():
        block = bt.blocks[bi]
        cuts = bt.cut_vertices_of(bi)
        c_h = cuts[0]
        if block.is_edge:
            a_h = next(v for v in block.vertices if v != c_h)
            entries.append(_edge_block_staple(inst, cross_by_h, a_h, c_h))
        else:
            entries.append(_wide_block_staple(inst, cross_by_h, block, c_h))
    return StapleAssignment(tuple(entries))


def _edge_block_staple(inst, cross_by_h, a_h: int, c_h: int) -> StapleEntry:
    a = inst.h_labels[a_h]
    anchors = cross_by_h.get(a_h, [])
    if len(anchors) < 2:
        raise RuntimeError(
            f"outer vertex {a} of an edge end-block has {len(anchors)} anchor "
            "neighbors; a 3-connected host guarantees two"
        )
    x, y = anchors[0], anchors[1]
    return StapleEntry(
        block_vertices=(min(a, inst.h_labels[c_h]), max(a, inst.h_labels[c_h])),
        cut_vertex=inst.h_labels[c_h],
        e=canon_edge(x, a),
        f=canon_edge(y, a),
    )


def _wide_block_staple(inst, cross_by_h, block: Block, c_h: int) -> StapleEntry:
    candidates = []
    for v_h in block.vertices:
        if v_h == c_h:
            continue
        for x in cross_by_h.get(v_h, []):
            candidates.append(canon_edge(x, inst.h_labels[v_h]))
    candidates.sort()
    anchor_set = set(inst.anchor_vertices)
    for i in range(len(candidates)):
        for j in range(i + 1, len(candidates)):
            e, f = candidates[i], candidates[j]
            if set(e) & set(f):
                continue  # staples in a 2-connected end-block must be independent
            return StapleEntry(
                block_vertices=tuple(sorted(inst.h_labels[v] for v in block.vertices)),
                cut_vertex=inst.h_labels[c_h],
                e=e,
                f=f,
            )
    raise RuntimeError(
        "no independent staple pair for an end-block; a 3-connected host "
        "guarantees one via three disjoint paths"
    )


def block_path_bound(
    inst: AnchoredInstance, a: int, b: int, budget: int | None = None
) -> tuple[int, PathSet]:
    """Product lower bound prod(t(B)+1) along H's block path from a to b,
    with the enumerated (a, b)-paths as witnesses (count >= bound always)."""
    if a == b:
        raise SameVertexError("block_path_bound needs distinct H vertices")
    if a not in inst.h_index or b not in inst.h_index:
        raise ValueError("both vertices must lie in H (host labels)")
    ah, bh = inst.h_index[a], inst.h_index[b]
    path = block_path(inst.h.graph, ah, bh)
    bound = prod(item.t + 1 for item in path if isinstance(item, Block))
    paths = enumerate_paths(inst.h, ah, bh, budget=budget)
    if len(paths) < bound:
        raise AssertionError(
            f"enumerated {len(paths)} paths below the product bound {bound}"
        )
    return bound, paths
