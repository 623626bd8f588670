"""Named graph constructors, anchored fixtures, and small-graph corpora.

The internal corpus enumerates all connected graphs up to isomorphism by
vertex augmentation with canonical-form dedup, then filters by the family
predicate. Streams are deterministic: n ascending, canonical form ascending.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .critical import is_k_critical_bool
from .errors import BadParametersError, EdgeAbsentError, ScaleGuardError
from .graph import Graph, SignedGraph, canon_edge, is_bipartite, is_k_connected
from .io import read_graph6
from .iso import canonical_form, canonical_graph

MAX_INTERNAL_N = 10


def complete_graph(n: int) -> Graph:
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise BadParametersError("cycles need at least 3 vertices")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    return Graph(10, edges)


@dataclass(frozen=True)
class Wheel:
    """A cycle joined to a clique; odd when the cycle length is odd."""

    graph: Graph
    rim: tuple[int, ...]
    hub: tuple[int, ...]
    odd: bool


def wheel(n: int, d: int = 1) -> Wheel:
    """The d-wheel on n vertices: C_{n-d} fully joined to K_d."""
    if d < 1 or n - d < 3:
        raise BadParametersError("wheel needs d >= 1 and a rim of length >= 3")
    r = n - d
    edges = [(i, (i + 1) % r) for i in range(r)]
    edges += [(i, r + j) for i in range(r) for j in range(d)]
    edges += [(r + i, r + j) for i in range(d) for j in range(i + 1, d)]
    return Wheel(
        graph=Graph(n, edges),
        rim=tuple(range(r)),
        hub=tuple(range(r, n)),
        odd=r % 2 == 1,
    )


@dataclass(frozen=True)
class ApexOddFilter:
    """Apex over an even cycle with parities tuned so one apex edge carries
    every odd cycle. A witness that quadratic odd-cycle bounds need plain
    (all-ones) parities, not general signed graphs."""

    sg: SignedGraph
    apex: int
    special: int  # the rim vertex b; edge (apex, b) carries all odd cycles
    rim: tuple[int, ...]

    @property
    def special_edge(self) -> tuple[int, int]:
        return canon_edge(self.apex, self.special)


def apex_odd_filter(n: int) -> ApexOddFilter:
    """Rim C_{2n} plus an apex joined everywhere; rim and apex-to-even-side
    edges get parity 1, apex-to-odd-side edges parity 0 except one."""
    if n < 2:
        raise BadParametersError("the construction needs a rim of length >= 4")
    r = 2 * n
    apex = r
    edges = [(i, (i + 1) % r) for i in range(r)] + [(i, apex) for i in range(r)]
    g = Graph(r + 1, edges)
    b = 1  # first odd-side rim vertex keeps parity 1
    parity = {}
    for e in g.edges:
        if apex in e:
            u = e[0] if e[1] == apex else e[1]
            parity[e] = 1 if (u % 2 == 0 or u == b) else 0
        else:
            parity[e] = 1
    return ApexOddFilter(
        sg=SignedGraph(g, parity), apex=apex, special=b, rim=tuple(range(r))
    )


def hajos_join(g1: Graph, e1: tuple[int, int], g2: Graph, e2: tuple[int, int]) -> Graph:
    """Delete e1 and e2, identify e1[0] with e2[0], join e1[1] to e2[1].

    Preserves k-criticality in the classical construction; callers certify
    the output rather than assume it.
    """
    e1c, e2c = canon_edge(*e1), canon_edge(*e2)
    if e1c not in set(g1.edges):
        raise EdgeAbsentError(f"{e1} not in the first graph")
    if e2c not in set(g2.edges):
        raise EdgeAbsentError(f"{e2} not in the second graph")
    a1, b1 = e1
    a2, b2 = e2
    shift = {}
    nxt = g1.n
    for w in range(g2.n):
        if w == a2:
            shift[w] = a1
        else:
            shift[w] = nxt
            nxt += 1
    edges = [e for e in g1.edges if e != e1c]
    edges += [
        (shift[u], shift[v]) for u, v in g2.edges if canon_edge(u, v) != e2c
    ]
    edges.append((b1, shift[b2]))
    return Graph(nxt, edges)


# ---------------------------------------------------------------------------
# exhaustive connected-graph corpus


_levels: dict[int, list[Graph]] = {}


def connected_graphs(n: int) -> list[Graph]:
    """All connected graphs on exactly n vertices, one canonical copy each."""
    if n < 1:
        return []
    if n > MAX_INTERNAL_N:
        raise ScaleGuardError(f"internal enumeration is capped at n = {MAX_INTERNAL_N}")
    if n in _levels:
        return _levels[n]
    if n == 1:
        out = [Graph(1)]
    else:
        seen: dict[bytes, Graph] = {}
        new = n - 1
        for g in connected_graphs(n - 1):
            for sub in range(1, 1 << new):
                extra = [
                    (w, new) for w in range(new) if sub >> w & 1
                ]
                h = Graph(n, g.edges + tuple(extra))
                form = canonical_form(h)
                if form not in seen:
                    seen[form] = canonical_graph(h)
        out = [seen[f] for f in sorted(seen)]
    _levels[n] = out
    return out


FAMILIES = (
    "connected",
    "four-critical",
    "k-critical",
    "three-connected-nonbipartite",
)


@dataclass(frozen=True)
class CorpusSpec:
    """What to stream: family filter, size cap, internal or graph6 source."""

    family: str
    max_n: int
    k: int | None = None
    source: str | None = None

    def predicate(self):
        if self.family == "connected":
            return lambda g: True
        if self.family == "four-critical":
            return lambda g: is_k_critical_bool(g, 4)
        if self.family == "k-critical":
            if self.k is None:
                raise BadParametersError("k-critical family needs k")
            k = self.k
            return lambda g: is_k_critical_bool(g, k)
        if self.family == "three-connected-nonbipartite":
            return lambda g: is_k_connected(g, 3) and not is_bipartite(g)
        raise BadParametersError(
            f"unknown family {self.family!r}; choose from {FAMILIES}"
        )


def corpus(spec: CorpusSpec) -> Iterator[Graph]:
    """Deterministic duplicate-free stream of family members up to max_n."""
    pred = spec.predicate()
    if spec.source is not None:
        seen: set[bytes] = set()
        with open(spec.source) as fh:
            for g in read_graph6(fh):
                if g.n > spec.max_n or not g.is_connected():
                    continue
                form = canonical_form(g)
                if form in seen:
                    continue
                seen.add(form)
                if pred(g):
                    yield canonical_graph(g)
        return
    if spec.max_n > MAX_INTERNAL_N:
        raise ScaleGuardError(
            f"internal enumeration is capped at n = {MAX_INTERNAL_N}; "
            "feed a graph6 source for larger corpora"
        )
    for n in range(1, spec.max_n + 1):
        for g in connected_graphs(n):
            if pred(g):
                yield g


# ---------------------------------------------------------------------------
# anchored fixtures


def anchored_host(
    anchor_len: int, h: Graph, cross: Iterable[tuple[int, int]]
) -> tuple[SignedGraph, tuple[int, ...]]:
    """Host = odd anchor cycle + shifted copy of h + the given cross edges.

    Cross pairs are (anchor vertex, h vertex) in their own labelings.
    """
    if anchor_len < 3 or anchor_len % 2 == 0:
        raise BadParametersError("anchor length must be odd and >= 3")
    edges = [(i, (i + 1) % anchor_len) for i in range(anchor_len)]
    edges += [(anchor_len + u, anchor_len + v) for u, v in h.edges]
    for c, hv in cross:
        if not (0 <= c < anchor_len and 0 <= hv < h.n):
            raise BadParametersError(f"cross edge ({c}, {hv}) out of range")
        edges.append((c, anchor_len + hv))
    g = Graph(anchor_len + h.n, edges)
    return SignedGraph.lift(g), tuple(range(anchor_len))


def _grow_fixture(
    anchor_len: int, h: Graph, base_cross: set[tuple[int, int]]
) -> tuple[SignedGraph, tuple[int, ...]] | None:
    """Add cross edges round-robin until the host is 3-connected."""
    cross = set(base_cross)
    all_pairs = [(c, hv) for c in range(anchor_len) for hv in range(h.n)]
    for extra in [()] + all_pairs:
        if extra:
            if extra in cross:
                continue
            cross.add(extra)
        sg, anchor = anchored_host(anchor_len, h, sorted(cross))
        if is_k_connected(sg.graph, 3):
            return sg, anchor
    return None


def _base_cross(anchor_len: int, h: Graph) -> set[tuple[int, int]]:
    """Round-robin cross edges covering every anchor vertex and topping up
    low-degree h vertices to total degree 3."""
    cross = {(c, c % h.n) for c in range(anchor_len)}
    spread = 0
    for hv in range(h.n):
        have = h.degree(hv) + sum(1 for _, x in cross if x == hv)
        while have < 3:
            cand = (spread % anchor_len, hv)
            spread += 1
            if cand in cross:
                continue
            cross.add(cand)
            have += 1
    return cross


def fixtures_two_connected_h() -> list[tuple[str, SignedGraph, tuple[int, ...]]]:
    """Anchored hosts whose remainder H is 2-connected; >= 20 of them,
    Petersen minus an induced 5-cycle included."""
    shapes: list[tuple[str, Graph]] = [
        ("c3", cycle_graph(3)),
        ("c4", cycle_graph(4)),
        ("c5", cycle_graph(5)),
        ("c6", cycle_graph(6)),
        ("k4", complete_graph(4)),
        ("k5", complete_graph(5)),
        ("k23", complete_bipartite(2, 3)),
        ("w5", wheel(5, 1).graph),
    ]
    out = []
    for anchor_len in (3, 5, 7):
        for name, h in shapes:
            built = _grow_fixture(anchor_len, h, _base_cross(anchor_len, h))
            if built is not None:
                sg, anchor = built
                out.append((f"a{anchor_len}-{name}", sg, anchor))
    out.append(("petersen-rim", SignedGraph.lift(petersen()), tuple(range(5))))
    return out


def _glued_triangles(k: int) -> Graph:
    """k triangles sharing one central vertex."""
    edges = []
    for i in range(k):
        a, b = 1 + 2 * i, 2 + 2 * i
        edges += [(0, a), (0, b), (a, b)]
    return Graph(1 + 2 * k, edges)


def _triangle_chain(k: int) -> Graph:
    """k triangles in a path, consecutive ones sharing a vertex."""
    edges = []
    for i in range(k):
        base = 2 * i
        edges += [(base, base + 1), (base, base + 2), (base + 1, base + 2)]
    return Graph(2 * k + 1, edges)


def _triangle_with_pendants(p: int) -> Graph:
    """Triangle 0-1-2 plus p pendant edges hanging off distinct corners."""
    edges = [(0, 1), (0, 2), (1, 2)]
    for i in range(p):
        edges.append((i % 3, 3 + i))
    return Graph(3 + p, edges)


def fixtures_end_blocks() -> list[tuple[str, SignedGraph, tuple[int, ...]]]:
    """Anchored hosts whose H has >= 2 end-blocks; >= 10 of them."""
    shapes: list[tuple[str, Graph]] = [
        ("2tri-star", _glued_triangles(2)),
        ("3tri-star", _glued_triangles(3)),
        ("2tri-chain", _triangle_chain(2)),
        ("3tri-chain", _triangle_chain(3)),
        ("tri-2pend", _triangle_with_pendants(2)),
        ("tri-3pend", _triangle_with_pendants(3)),
        ("2k4-star", _two_k4s()),
    ]
    out = []
    for anchor_len in (3, 5):
        for name, h in shapes:
            built = _grow_fixture(anchor_len, h, _base_cross(anchor_len, h))
            if built is not None:
                sg, anchor = built
                out.append((f"a{anchor_len}-{name}", sg, anchor))
    return out


def _two_k4s() -> Graph:
    edges = [(u, v) for u in range(4) for v in range(u + 1, 4)]
    group = [0, 4, 5, 6]
    edges += [
        (group[i], group[j]) for i in range(4) for j in range(i + 1, 4)
    ]
    return Graph(7, edges)
