"""Exact enumeration of simple cycles and paths with parity filters.

Counts are the ground truth for every bound verified by this package, so
enumeration is budget-capped and raises rather than truncating. A second,
independently coded enumerator is kept for cross-checks.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import (
    BudgetExceededError,
    EdgeAbsentError,
    HypothesisViolatedError,
    NotFoundError,
    SameVertexError,
    ScaleGuardError,
)
from .graph import (
    Edge,
    Graph,
    SignedGraph,
    as_signed,
    canon_edge,
    is_bipartite_signed,
    is_k_connected,
)

DEFAULT_BUDGET = 10_000_000
BUDGET_ENV = "CRITGRAPH_BUDGET"


def get_budget(budget: int | None = None) -> int:
    if budget is not None:
        return budget
    raw = os.environ.get(BUDGET_ENV)
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise ValueError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
    return DEFAULT_BUDGET


@dataclass(frozen=True)
class Cycle:
    """A simple cycle: canonical sorted edge tuple plus a parity tag."""

    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]
    parity: int

    @property
    def length(self) -> int:
        return len(self.edges)

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def sort_key(self):
        return (len(self.edges), self.edges)


def make_cycle(sg: SignedGraph, vertices: Iterable[int]) -> Cycle:
    vs = tuple(vertices)
    edges = tuple(sorted(canon_edge(u, v) for u, v in zip(vs, vs[1:] + vs[:1])))
    parity = sg.edges_parity(edges)
    return Cycle(vs, edges, parity)


@dataclass(frozen=True)
class CycleSet:
    """Deduplicated cycles in deterministic (length, edge tuple) order."""

    cycles: tuple[Cycle, ...]

    @property
    def odd_count(self) -> int:
        return sum(1 for c in self.cycles if c.parity == 1)

    @property
    def even_count(self) -> int:
        return sum(1 for c in self.cycles if c.parity == 0)

    def count(self, parity: int) -> int:
        return sum(1 for c in self.cycles if c.parity == parity)

    def edge_sets(self) -> set[frozenset[Edge]]:
        return {c.edge_set() for c in self.cycles}

    def __len__(self):
        return len(self.cycles)

    def __iter__(self) -> Iterator[Cycle]:
        return iter(self.cycles)


@dataclass(frozen=True)
class SimplePath:
    """A simple path between declared endpoints; parity of its edge set."""

    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]
    parity: int

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def is_single_edge(self) -> bool:
        return len(self.edges) == 1

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)


@dataclass(frozen=True)
class PathSet:
    x: int
    y: int
    paths: tuple[SimplePath, ...]

    def count(self, parity: int, include_edge: bool = True) -> int:
        return sum(
            1
            for p in self.paths
            if p.parity == parity and (include_edge or not p.is_single_edge)
        )

    @property
    def has_direct_edge(self) -> bool:
        return any(p.is_single_edge for p in self.paths)

    def __len__(self):
        return len(self.paths)

    def __iter__(self) -> Iterator[SimplePath]:
        return iter(self.paths)


def _cycle_vertex_seqs(g: Graph, budget: int) -> Iterator[tuple[int, ...]]:
    """Every simple cycle exactly once, as a vertex sequence.

    Rooted backtracking: each cycle is reported from its smallest vertex,
    with the direction fixed by second-vertex < last-vertex.
    """
    n = g.n
    adj = g.adj
    found = 0
    path: list[int] = []

    def dfs(root: int, v: int, in_path: int) -> Iterator[tuple[int, ...]]:
        nonlocal found
        for w in adj[v]:
            if w < root:
                continue
            if w == root:
                if len(path) >= 3 and path[1] < path[-1]:
                    found += 1
                    if found > budget:
                        raise BudgetExceededError(
                            f"cycle count exceeded budget {budget}"
                        )
                    yield tuple(path)
            elif not in_path >> w & 1:
                path.append(w)
                yield from dfs(root, w, in_path | 1 << w)
                path.pop()

    for root in range(n):
        path = [root]
        yield from dfs(root, root, 1 << root)


def enumerate_cycles(
    sg: SignedGraph | Graph,
    parity_filter: int | None = None,
    budget: int | None = None,
) -> CycleSet:
    """All simple cycles, optionally restricted to one parity.

    Raises BudgetExceededError once the total cycle count passes the cap
    (env CRITGRAPH_BUDGET or the `budget` argument); partial counts are
    never returned.
    """
    sg = as_signed(sg)
    cap = get_budget(budget)
    out = []
    for seq in _cycle_vertex_seqs(sg.graph, cap):
        c = make_cycle(sg, seq)
        if parity_filter is None or c.parity == parity_filter:
            out.append(c)
    out.sort(key=Cycle.sort_key)
    return CycleSet(tuple(out))


def enumerate_cycles_reference(
    sg: SignedGraph | Graph, budget: int | None = None
) -> CycleSet:
    """Independent oracle enumerator: path DFS from every vertex, dedup by edge set.

    Deliberately different traversal logic from enumerate_cycles; the two
    must agree on the full cycle set.
    """
    sg = as_signed(sg)
    g = sg.graph
    cap = get_budget(budget)
    seen: dict[frozenset[Edge], tuple[int, ...]] = {}
    for start in range(g.n):
        stack: list[tuple[int, tuple[int, ...]]] = [(start, (start,))]
        while stack:
            v, path = stack.pop()
            for w in g.adj[v]:
                if w == start and len(path) >= 3:
                    key = frozenset(
                        canon_edge(a, b) for a, b in zip(path, path[1:] + (start,))
                    )
                    if key not in seen:
                        seen[key] = path
                        if len(seen) > cap:
                            raise BudgetExceededError(
                                f"cycle count exceeded budget {cap}"
                            )
                elif w not in path:
                    stack.append((w, path + (w,)))
    cycles = []
    for path in seen.values():
        root = min(path)
        i = path.index(root)
        rot = path[i:] + path[:i]
        if rot[1] > rot[-1]:
            rot = (rot[0],) + tuple(reversed(rot[1:]))
        cycles.append(make_cycle(sg, rot))
    cycles.sort(key=Cycle.sort_key)
    return CycleSet(tuple(cycles))


def f_count(g: Graph | SignedGraph, budget: int | None = None) -> int:
    """Number of distinct odd cycles (parity 1 after the all-ones lift)."""
    sg = as_signed(g)
    cap = get_budget(budget)
    count = 0
    for seq in _cycle_vertex_seqs(sg.graph, cap):
        if sg.walk_parity(seq + (seq[0],)) == 1:
            count += 1
    return count


def cycle_counts(g: Graph | SignedGraph, budget: int | None = None) -> tuple[int, int]:
    """(even, odd) cycle counts in one enumeration pass."""
    sg = as_signed(g)
    cap = get_budget(budget)
    counts = [0, 0]
    for seq in _cycle_vertex_seqs(sg.graph, cap):
        counts[sg.walk_parity(seq + (seq[0],))] += 1
    return counts[0], counts[1]


def enumerate_paths(
    sg: SignedGraph | Graph,
    x: int,
    y: int,
    parity_filter: int | None = None,
    budget: int | None = None,
) -> PathSet:
    """All simple (x, y)-paths; the direct edge, when present, is included
    and flagged so callers can drop it."""
    sg = as_signed(sg)
    g = sg.graph
    if x == y:
        raise SameVertexError("enumerate_paths needs distinct endpoints")
    cap = get_budget(budget)
    out = []
    stack: list[tuple[int, tuple[int, ...], int]] = [(x, (x,), 1 << x)]
    while stack:
        v, path, mask = stack.pop()
        for w in g.adj[v]:
            if w == y:
                vs = path + (y,)
                edges = tuple(sorted(canon_edge(a, b) for a, b in zip(vs, vs[1:])))
                p = sg.edges_parity(edges)
                if parity_filter is None or p == parity_filter:
                    out.append(SimplePath(vs, edges, p))
                    if len(out) > cap:
                        raise BudgetExceededError(f"path count exceeded budget {cap}")
            elif not mask >> w & 1:
                stack.append((w, path + (w,), mask | 1 << w))
    out.sort(key=lambda p: (len(p.edges), p.edges))
    return PathSet(x, y, tuple(out))


def count_paths_by_parity(
    sg: SignedGraph | Graph, x: int, y: int
) -> tuple[int, int]:
    """(even, odd) counts of simple (x, y)-paths, by subset DP.

    Independent of enumerate_paths and much faster on dense graphs; used by
    the bound checks. Guarded to n <= 16.
    """
    sg = as_signed(sg)
    g = sg.graph
    if x == y:
        raise SameVertexError("count_paths_by_parity needs distinct endpoints")
    if g.n > 16:
        raise ScaleGuardError("subset DP supports n <= 16")
    n = g.n
    # dp keyed by vertex mask; value: flat list [v * 2 + parity] -> count.
    # Masks are processed in BFS (popcount) order, so every contributor to a
    # mask is finished before the mask itself is expanded.
    start = 1 << x
    dp: dict[int, list[int]] = {start: [0] * (2 * n)}
    dp[start][2 * x] = 1
    even = odd = 0
    masks = [start]
    idx = 0
    while idx < len(masks):
        mask = masks[idx]
        idx += 1
        row = dp.pop(mask)
        for v in range(n):
            ce, co = row[2 * v], row[2 * v + 1]
            if not (ce or co):
                continue
            if v == y:
                even += ce
                odd += co
                continue  # simple paths stop at y
            for w in g.adj[v]:
                if mask >> w & 1:
                    continue
                pm = sg.parity(v, w)
                nmask = mask | 1 << w
                nrow = dp.get(nmask)
                if nrow is None:
                    nrow = dp[nmask] = [0] * (2 * n)
                    masks.append(nmask)
                nrow[2 * w + pm] += ce
                nrow[2 * w + (1 ^ pm)] += co
    return even, odd


def cycles_through_vertex(
    sg: SignedGraph | Graph,
    x: int,
    parity: int,
    color: Mapping[int, object] | None = None,
    budget: int | None = None,
) -> CycleSet:
    """Cycles of the given parity through x.

    `color` maps each neighbor y of x to the color of edge xy; when given,
    only cycles whose two edges at x carry distinct colors are kept.
    """
    sg = as_signed(sg)
    if not 0 <= x < sg.n:
        raise ValueError(f"vertex {x} out of range")
    full = enumerate_cycles(sg, parity_filter=parity, budget=budget)
    out = []
    for c in full.cycles:
        if x not in c.vertices:
            continue
        if color is not None:
            ends = [v for u, v in c.edges if u == x] + [u for u, v in c.edges if v == x]
            if color[ends[0]] == color[ends[1]]:
                continue
        out.append(c)
    return CycleSet(tuple(out))


def cycles_through_edge(
    sg: SignedGraph | Graph,
    e: tuple[int, int],
    parity: int,
    budget: int | None = None,
) -> CycleSet:
    """Cycles of the given parity containing the edge e."""
    sg = as_signed(sg)
    e = canon_edge(*e)
    if e not in sg.parities:
        raise EdgeAbsentError(f"edge {e} not in the graph")
    full = enumerate_cycles(sg, parity_filter=parity, budget=budget)
    return CycleSet(tuple(c for c in full.cycles if e in c.edge_set()))


def _is_induced_cycle(g: Graph, c: Cycle) -> bool:
    inside = c.vertex_set()
    inner = sum(1 for u, v in g.edges if u in inside and v in inside)
    return inner == c.length


def _normalize_avoid(avoid) -> frozenset[int]:
    if avoid is None:
        return frozenset()
    if isinstance(avoid, int):
        return frozenset((avoid,))
    return frozenset(avoid)


def nonseparating_induced_odd_cycle(
    sg: SignedGraph | Graph,
    avoid: int | Iterable[int] | None = None,
    check: bool = True,
    budget: int | None = None,
) -> Cycle:
    """An induced odd cycle C, disjoint from `avoid`, with sg - C connected.

    Existence is a theorem under the hypotheses verified in checked mode:
    a single avoided vertex s needs a 3-connected sg with sg - s
    non-bipartite; an avoided vertex set needs sg 3-connected (or its
    underlying graph 4-critical), the set connected, and sg - set
    non-bipartite. Search is by increasing length, then canonical order.
    """
    sg = as_signed(sg)
    g = sg.graph
    avoid_set = _normalize_avoid(avoid)
    for v in avoid_set:
        if not 0 <= v < g.n:
            raise ValueError(f"avoided vertex {v} out of range")

    if check:
        _check_nonsep_hypotheses(sg, avoid, avoid_set)

    for c in enumerate_cycles(sg, parity_filter=1, budget=budget).cycles:
        vs = c.vertex_set()
        if vs & avoid_set:
            continue
        if not _is_induced_cycle(g, c):
            continue
        if not g.connected_after_removal(vs):
            continue
        return c
    if check:
        raise RuntimeError(
            "hypotheses verified but no non-separating induced odd cycle found; "
            "this contradicts the structural guarantee"
        )
    raise NotFoundError("no non-separating induced odd cycle avoiding the given set")


def _check_nonsep_hypotheses(sg: SignedGraph, avoid, avoid_set: frozenset[int]) -> None:
    g = sg.graph
    if avoid is None or isinstance(avoid, int):
        if not is_k_connected(g, 3):
            raise HypothesisViolatedError("graph is not 3-connected")
        rest = sg.without_vertices(avoid_set)[0] if avoid_set else sg
        if is_bipartite_signed(rest) is not None:
            what = f"graph minus vertex {avoid}" if avoid_set else "graph"
            raise HypothesisViolatedError(f"{what} is bipartite")
        return
    if not avoid_set:
        raise HypothesisViolatedError("avoided subgraph is empty")
    sub, _ = g.induced(avoid_set)
    if not sub.is_connected():
        raise HypothesisViolatedError("avoided subgraph is not connected")
    rest, _ = sg.without_vertices(avoid_set)
    if is_bipartite_signed(rest) is not None:
        raise HypothesisViolatedError("graph minus the avoided set has no odd cycle")
    if not is_k_connected(g, 3):
        from .critical import is_k_critical_bool  # lazy: avoids an import cycle

        if not is_k_critical_bool(g, 4):
            raise HypothesisViolatedError(
                "graph is neither 3-connected nor 4-critical"
            )
