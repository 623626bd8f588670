"""Exact coloring, k-criticality certificates, critical-subgraph families,
and the 2-cut decomposition of critical graphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .cycles import count_paths_by_parity, f_count, get_budget
from .errors import (
    BadParametersError,
    BudgetExceededError,
    NoTwoCutError,
    NotCriticalError,
)
from .graph import Edge, Graph, t_value, two_cuts


def _max_clique(g: Graph) -> int:
    """Exact max clique size by bitmask branch and bound (tiny graphs)."""
    best = 0
    masks = g.masks

    def grow(cand: int, size: int):
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            grow(cand & masks[v], size + 1)

    grow((1 << g.n) - 1, 0)
    return best


def find_coloring(g: Graph, c: int) -> tuple[int, ...] | None:
    """A proper coloring with at most c colors, or None.

    DSATUR-ordered backtracking with a new-color symmetry break; the search
    order is deterministic, so the returned coloring is canonical for (g, c).
    """
    n = g.n
    if n == 0:
        return ()
    if c <= 0:
        return None
    colors = [-1] * n
    # forbid[v] = bitmask of colors used by v's neighbors
    forbid_count = [[0] * c for _ in range(n)]

    def pick() -> int:
        best_v, best_key = -1, None
        for v in range(n):
            if colors[v] != -1:
                continue
            sat = sum(1 for x in forbid_count[v] if x)
            key = (-sat, -g.degree(v), v)
            if best_key is None or key < best_key:
                best_v, best_key = v, key
        return best_v

    def bt(done: int, max_used: int) -> bool:
        if done == n:
            return True
        v = pick()
        lim = min(c, max_used + 2)
        for col in range(lim):
            if forbid_count[v][col]:
                continue
            colors[v] = col
            for w in g.adj[v]:
                if colors[w] == -1:
                    forbid_count[w][col] += 1
            if bt(done + 1, max(max_used, col)):
                return True
            for w in g.adj[v]:
                if colors[w] == -1:
                    forbid_count[w][col] -= 1
            colors[v] = -1
        return False

    if bt(0, -1):
        return tuple(colors)
    return None


def is_colorable(g: Graph, c: int) -> bool:
    return find_coloring(g, c) is not None


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number; branch and bound seeded by a clique lower bound."""
    if g.n == 0:
        return 0
    if g.m == 0:
        return 1
    c = max(2, _max_clique(g))
    while not is_colorable(g, c):
        c += 1
    return c


@dataclass(frozen=True)
class CriticalityCertificate:
    """Witnesses that chi(G) = k while every edge-deleted subgraph is (k-1)-colorable."""

    k: int
    colorings: dict[Edge, tuple[int, ...]]
    min_degree_ok: bool


def is_k_critical(g: Graph, k: int) -> CriticalityCertificate | None:
    """Certificate iff g is k-critical (and has no isolated vertex)."""
    if k < 3:
        raise BadParametersError("criticality is supported for k >= 3")
    if g.n == 0 or g.m == 0:
        return None
    degs = g.degrees()
    if min(degs) < k - 1:
        return None  # isolated vertices included: critical graphs need degree >= k-1
    if find_coloring(g, k - 1) is not None:
        return None  # chi <= k-1
    colorings = {}
    for e in g.edges:
        col = find_coloring(g.remove_edge(*e), k - 1)
        if col is None:
            return None  # some proper subgraph still needs k colors
        colorings[e] = col
    # chi = k exactly: not (k-1)-colorable, and any g-e coloring extends with one color
    return CriticalityCertificate(k, colorings, True)


@lru_cache(maxsize=None)
def is_k_critical_bool(g: Graph, k: int) -> bool:
    # accepts k = 2 (single edges) so the degenerate k = 3 family works
    if k < 2:
        raise BadParametersError("criticality is supported for k >= 2")
    if g.n == 0 or g.m == 0 or min(g.degrees()) < k - 1:
        return False
    if find_coloring(g, k - 1) is not None:
        return False
    return all(is_colorable(g.remove_edge(*e), k - 1) for e in g.edges)


def _edge_induced(edges: frozenset[Edge]) -> Graph:
    vs = sorted({x for e in edges for x in e})
    idx = {v: i for i, v in enumerate(vs)}
    return Graph(len(vs), ((idx[u], idx[v]) for u, v in edges))


@dataclass(frozen=True)
class CriticalFamily:
    """Distinct (k-1)-critical subgraphs collected from per-edge lists L(e)."""

    k: int
    members: frozenset[frozenset[Edge]]
    per_edge: dict[Edge, tuple[frozenset[Edge], ...]]
    lists_distinct: bool
    miss_claim_holds: bool  # every f != e is missed by some member of L(e)
    degenerate: bool  # k == 3: members collapse to single edges

    @property
    def size(self) -> int:
        return len(self.members)


def gallai_family(g: Graph, k: int) -> CriticalFamily:
    """Per edge e, k-2 certified (k-1)-critical subgraphs through e, from the
    color classes of a canonical (k-1)-coloring of g - e; plus the
    distinctness certificates that make the family a counting lower bound.
    """
    cert = is_k_critical(g, k)
    if cert is None:
        raise NotCriticalError(f"graph is not {k}-critical")
    per_edge: dict[Edge, tuple[frozenset[Edge], ...]] = {}
    for e in g.edges:
        u, v = e
        coloring = cert.colorings[e]
        if coloring[u] != coloring[v]:
            raise AssertionError(
                "a (k-1)-coloring of g-e split the endpoints of e; "
                "g cannot be k-critical"
            )
        shared = coloring[u]
        classes = [
            tuple(w for w in range(g.n) if coloring[w] == i) for i in range(k - 1)
        ]
        if any(not cl for cl in classes):
            raise AssertionError("empty color class in an exact (k-1)-coloring")
        members = []
        for i in range(k - 1):
            if i == shared:
                continue
            keep = {w for w in range(g.n) if coloring[w] != i}
            sub_edges = frozenset(
                f for f in g.edges if f[0] in keep and f[1] in keep
            )
            member = _minimal_critical_edges(sub_edges, k - 1)
            if e not in member:
                raise AssertionError("extracted critical subgraph lost the edge e")
            members.append(member)
        if len(set(members)) != k - 2:
            raise AssertionError("per-edge critical subgraphs collided")
        per_edge[e] = tuple(sorted(members, key=sorted))

    claim = all(
        any(f not in member for member in per_edge[e])
        for e in g.edges
        for f in g.edges
        if f != e
    )
    lists = {e: frozenset(ms) for e, ms in per_edge.items()}
    distinct = len(set(lists.values())) == len(lists)
    members = frozenset(m for ms in per_edge.values() for m in ms)
    return CriticalFamily(
        k=k,
        members=members,
        per_edge=per_edge,
        lists_distinct=distinct,
        miss_claim_holds=claim,
        degenerate=(k == 3),
    )


def _minimal_critical_edges(edges: frozenset[Edge], k: int) -> frozenset[Edge]:
    """Greedy edge-minimal subset that still needs k colors, canonical order."""
    current = set(edges)
    for f in sorted(edges):
        trial = current - {f}
        if trial and not is_colorable(_edge_induced(frozenset(trial)), k - 1):
            current = trial
    result = frozenset(current)
    if not is_k_critical_bool(_edge_induced(result), k):
        raise AssertionError("edge-minimal extraction is not critical; solver bug")
    return result


def f_s_count(g: Graph, s: int, budget: int | None = None) -> int:
    """Exact number of distinct s-critical subgraphs.

    s = 3 counts odd cycles on any graph; s >= 4 enumerates edge subsets
    with min-degree pruning and is limited to n <= 9.
    """
    if s < 3:
        raise BadParametersError("s-critical counting starts at s = 3")
    if s == 3:
        return f_count(g, budget=budget)
    if g.n > 9:
        raise BudgetExceededError("exact f_s for s >= 4 is limited to n <= 9")
    cap = get_budget(budget)
    edges = g.edges
    m = len(edges)
    future = [0] * g.n  # degrees available among edges not yet decided
    for u, v in edges:
        future[u] += 1
        future[v] += 1
    chosen_deg = [0] * g.n
    chosen: list[Edge] = []
    steps = 0
    count = 0

    def feasible() -> bool:
        return all(
            d == 0 or d + future[v] >= s - 1 for v, d in enumerate(chosen_deg)
        )

    def rec(i: int):
        nonlocal steps, count
        steps += 1
        if steps > cap:
            raise BudgetExceededError(f"subgraph search exceeded budget {cap}")
        if i == m:
            if chosen and min(
                chosen_deg[v] for v in range(g.n) if chosen_deg[v]
            ) >= s - 1:
                sub = _edge_induced(frozenset(chosen))
                if sub.is_connected() and is_k_critical_bool(sub, s):
                    count += 1
            return
        u, v = edges[i]
        future[u] -= 1
        future[v] -= 1
        # exclude edges[i]
        if feasible():
            rec(i + 1)
        # include edges[i]
        chosen.append(edges[i])
        chosen_deg[u] += 1
        chosen_deg[v] += 1
        if feasible():
            rec(i + 1)
        chosen_deg[u] -= 1
        chosen_deg[v] -= 1
        chosen.pop()
        future[u] += 1
        future[v] += 1

    rec(0)
    return count


def contract_pair(g: Graph, u: int, v: int) -> Graph:
    """Contract non-adjacent u, v into one vertex (placed last).

    Raises if u and v share a neighbor: the contraction would need parallel
    edges, which the simple-graph type refuses to merge silently.
    """
    common = set(g.adj[u]) & set(g.adj[v]) - {u, v}
    if common:
        raise BadParametersError(
            f"contracting {u},{v} would merge parallel edges (common neighbors {sorted(common)})"
        )
    others = [w for w in range(g.n) if w not in (u, v)]
    idx = {w: i for i, w in enumerate(others)}
    z = len(others)
    edges = []
    for a, b in g.edges:
        a2 = idx.get(a, z)
        b2 = idx.get(b, z)
        if a2 == z and b2 == z:
            continue  # the (absent) uv edge
        edges.append((a2, b2))
    return Graph(z + 1, edges)


@dataclass
class TwoCutSplit:
    """A 2-cut {u,v} of a k-critical graph with its certified decomposition.

    h1/h2 follow the certified orientation: case 1 means h1 = g1 + uv and
    h2 = g2 / {u,v}; case 2 is the symmetric variant with the roles of the
    sides swapped. case is None when neither orientation certifies.
    """

    k: int
    cut: tuple[int, int]
    side1: tuple[int, ...]  # vertex sets excluding the cut pair
    side2: tuple[int, ...]
    g1: Graph
    g2: Graph
    h1: Graph | None
    h2: Graph | None
    case: int | None
    checks: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def two_cut_split(g: Graph, k: int, cut: tuple[int, int] | None = None) -> TwoCutSplit:
    """Certify the 2-cut decomposition of a k-critical graph.

    With no cut given, picks the 2-cut whose smaller side has minimum order
    (ties broken lexicographically). Certifies: uv not an edge, exactly two
    sides, no common neighbor on the contracted side, both derived graphs
    k-critical, the t identity, and that both sides carry (u,v)-paths of
    both parities.
    """
    if k < 4:
        raise BadParametersError("the 2-cut decomposition needs k >= 4")
    if not is_k_critical_bool(g, k):
        raise NotCriticalError(f"graph is not {k}-critical")
    cuts = [c.vertices for c in two_cuts(g)]
    if not cuts:
        raise NoTwoCutError("graph is 3-connected")
    if cut is not None:
        cut = tuple(sorted(cut))
        if cut not in cuts:
            raise NoTwoCutError(f"{cut} is not a 2-cut of this graph")
    else:
        def smaller_side(c):
            rest, _ = g.without_vertices(c)
            return min(len(comp) for comp in rest.components())

        cut = min(cuts, key=lambda c: (smaller_side(c), c))

    u, v = cut
    rest, labels = g.without_vertices(cut)
    comps = [tuple(labels[i] for i in comp) for comp in rest.components()]
    comps.sort(key=lambda c: (len(c), c))
    checks: dict[str, bool] = {
        "cut_nonedge": not g.has_edge(u, v),
        "two_sides": len(comps) == 2,
    }
    side1 = comps[0]
    side2 = tuple(sorted(x for comp in comps[1:] for x in comp))

    def build(side):
        sub, lbl = g.induced(set(side) | {u, v})
        return sub, {old: i for i, old in enumerate(lbl)}

    g1, map1 = build(side1)
    g2, map2 = build(side2)

    def try_orientation(ga, mapa, gb, mapb):
        """Certify (ga + uv, gb / {u,v}); returns (flags, h_aug, h_con)."""
        flags = {}
        ua, va = mapa[u], mapa[v]
        ub, vb = mapb[u], mapb[v]
        flags["no_common_neighbor"] = not (
            set(gb.adj[ub]) & set(gb.adj[vb]) - {ub, vb}
        )
        ha = ga.add_edge(ua, va)
        flags["h1_critical"] = is_k_critical_bool(ha, k)
        hb = None
        if flags["no_common_neighbor"]:
            hb = contract_pair(gb, ub, vb)
            flags["h2_critical"] = is_k_critical_bool(hb, k)
            flags["t_identity"] = t_value(ha) + t_value(hb) == t_value(g) + 1
        else:
            flags["h2_critical"] = False
            flags["t_identity"] = False
        return flags, ha, hb

    flags1, h1a, h1b = try_orientation(g1, map1, g2, map2)
    flags2, h2a, h2b = try_orientation(g2, map2, g1, map1)
    if all(flags1.values()):
        case, flags, h1, h2 = 1, flags1, h1a, h1b
    elif all(flags2.values()):
        case, flags, h1, h2 = 2, flags2, h2a, h2b
    else:
        case, flags, h1, h2 = None, flags1, h1a, h1b
    checks.update(flags)

    for name, (sub, mp) in (("side1", (g1, map1)), ("side2", (g2, map2))):
        even, odd = count_paths_by_parity(sub, mp[u], mp[v])
        checks[f"{name}_paths_both_parities"] = even >= 1 and odd >= 1

    return TwoCutSplit(
        k=k,
        cut=cut,
        side1=side1,
        side2=side2,
        g1=g1,
        g2=g2,
        h1=h1,
        h2=h2,
        case=case,
        checks=checks,
    )
