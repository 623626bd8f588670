"""Named bound checks and the corpus sweep driver.

Each check verifies its own hypotheses first: a graph outside them is
SKIPPED, which is evidence of nothing. All inequalities are evaluated in
exact integer arithmetic; the quadratic bounds compare 50*count against
t^2 rather than multiplying by a float constant.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, prod

from .critical import (
    chromatic_number,
    f_s_count,
    is_k_critical_bool,
    two_cut_split,
)
from .cycles import count_paths_by_parity, cycle_counts
from .decomp import Block, block_tree, is_two_connected
from .errors import CritGraphError, UnknownCheckError
from .generators import CorpusSpec, corpus
from .graph import (
    Graph,
    SignedGraph,
    as_signed,
    canon_edge,
    is_bipartite_signed,
    is_k_connected,
    t_value,
    two_cuts,
)
from .iso import graph_id
from .structure import basic_cycles, build_anchored

GraphLike = Graph | SignedGraph


@dataclass
class Outcome:
    """What a check measured; run_check turns this into a report."""

    status: str  # "ok" or "skip"
    measured: int | None = None
    bound_num: int | None = None
    bound_den: int = 1
    relation: str = "ge"  # measured/den vs bound: ge, le, or eq
    extra_ok: bool = True  # side conditions beyond the inequality
    witness: dict = field(default_factory=dict)


def _skip(reason: str) -> Outcome:
    return Outcome(status="skip", witness={"reason": reason})


@dataclass
class CheckReport:
    graph: str
    n: int
    m: int
    check: str
    status: str = "error"  # pass / fail / skip / error
    measured: int | None = None
    bound_num: int | None = None
    bound_den: int = 1
    relation: str = "ge"
    witness: dict = field(default_factory=dict)
    seconds: float = 0.0
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {
            "graph": self.graph,
            "n": self.n,
            "m": self.m,
            "check": self.check,
            "status": self.status,
            "measured": self.measured,
            "bound_num": self.bound_num,
            "bound_den": self.bound_den,
            "relation": self.relation,
            "witness": self.witness,
            "seconds": round(self.seconds, 6),
            "error": self.error,
        }


# cached per-graph quantities shared by several checks


@lru_cache(maxsize=None)
def _counts(sg: SignedGraph) -> tuple[int, int]:
    return cycle_counts(sg)


@lru_cache(maxsize=None)
def _three_connected(g: Graph) -> bool:
    return is_k_connected(g, 3)


@lru_cache(maxsize=None)
def _chi(g: Graph) -> int:
    return chromatic_number(g)


def _nonbipartite(sg: SignedGraph) -> bool:
    return is_bipartite_signed(sg) is None


def _plain(g: GraphLike) -> Graph:
    return g.graph if isinstance(g, SignedGraph) else g


def _four_critical(g: GraphLike) -> bool:
    return is_k_critical_bool(_plain(g), 4)


# ---------------------------------------------------------------------------
# the checks


def check_t_additivity(g: GraphLike) -> Outcome:
    """t of a connected graph equals the sum of its blocks' t values."""
    pg = _plain(g)
    if not pg.is_connected():
        return _skip("not connected")
    parts = [b.t for b in block_tree(pg).blocks]
    return Outcome(
        status="ok",
        measured=t_value(pg),
        bound_num=sum(parts),
        relation="eq",
        witness={"per_block": parts},
    )


def check_block_path_count(g: GraphLike) -> Outcome:
    """Every two vertices of a block are joined by at least t(B)+1 paths in it."""
    sg = as_signed(g)
    pg = sg.graph
    if not pg.is_connected():
        return _skip("not connected")
    worst = None
    for block in block_tree(pg).blocks:
        if len(block.vertices) < 2:
            continue
        sub, labels = sg.induced(block.vertices)
        bound = block.t + 1
        for i in range(sub.n):
            for j in range(i + 1, sub.n):
                even, odd = count_paths_by_parity(sub, i, j)
                count = even + odd
                if worst is None or count - bound < worst[0] - worst[1]:
                    worst = (count, bound, labels[i], labels[j])
    if worst is None:
        return _skip("no block with two vertices")
    count, bound, x, y = worst
    return Outcome(
        status="ok",
        measured=count,
        bound_num=bound,
        witness={"pair": [x, y]},
    )


def check_edge_density(g: GraphLike) -> Outcome:
    """4-critical graphs have 3e >= 5n - 2."""
    pg = _plain(g)
    if not _four_critical(pg):
        return _skip("not 4-critical")
    return Outcome(status="ok", measured=3 * pg.m, bound_num=5 * pg.n - 2)


def check_family_binomial(g: GraphLike) -> Outcome:
    """k-critical graphs satisfy C(count of (k-1)-critical subgraphs, k-2) >= e."""
    pg = _plain(g)
    k = _chi(pg)
    if k < 4 or not is_k_critical_bool(pg, k):
        return _skip("not k-critical for any k >= 4")
    f_prev = _counts(as_signed(pg))[1] if k == 4 else f_s_count(pg, k - 1)
    return Outcome(
        status="ok",
        measured=comb(f_prev, k - 2),
        bound_num=pg.m,
        witness={"k": k, "f_prev": f_prev},
    )


def check_odd_linear_critical(g: GraphLike) -> Outcome:
    """4-critical graphs have at least 2t-2 odd cycles, equality only at K4."""
    pg = _plain(g)
    if not _four_critical(pg):
        return _skip("not 4-critical")
    f = _counts(as_signed(pg))[1]
    bound = 2 * t_value(pg) - 2
    equality = f == bound
    is_k4 = pg.n == 4 and pg.m == 6
    return Outcome(
        status="ok",
        measured=f,
        bound_num=bound,
        extra_ok=(not equality) or is_k4,
        witness={"equality": equality, "is_k4": is_k4},
    )


def check_odd_linear_3conn(g: GraphLike) -> Outcome:
    """3-connected non-bipartite graphs have at least 2t-2 odd cycles."""
    sg = as_signed(g)
    if not _three_connected(sg.graph):
        return _skip("not 3-connected")
    if not _nonbipartite(sg):
        return _skip("bipartite")
    f = _counts(sg)[1]
    return Outcome(status="ok", measured=f, bound_num=2 * t_value(sg.graph) - 2)


def check_odd_quadratic_critical(g: GraphLike) -> Outcome:
    """4-critical graphs: 50 * odd cycles >= t^2."""
    pg = _plain(g)
    if not _four_critical(pg):
        return _skip("not 4-critical")
    f = _counts(as_signed(pg))[1]
    t = t_value(pg)
    return Outcome(status="ok", measured=f, bound_num=t * t, bound_den=50)


def check_odd_quadratic_3conn(g: GraphLike) -> Outcome:
    """3-connected non-bipartite graphs: 50 * odd cycles >= t^2."""
    sg = as_signed(g)
    if not _three_connected(sg.graph):
        return _skip("not 3-connected")
    if not _nonbipartite(sg):
        return _skip("bipartite")
    f = _counts(sg)[1]
    t = t_value(sg.graph)
    return Outcome(status="ok", measured=f, bound_num=t * t, bound_den=50)


def check_even_quadratic(g: GraphLike) -> Outcome:
    """4-critical or 3-connected graphs: 50 * even cycles >= t^2."""
    sg = as_signed(g)
    if not (_three_connected(sg.graph) or _four_critical(sg.graph)):
        return _skip("neither 3-connected nor 4-critical")
    even = _counts(sg)[0]
    t = t_value(sg.graph)
    return Outcome(status="ok", measured=even, bound_num=t * t, bound_den=50)


def _anchored_or_skip(g: GraphLike):
    sg = as_signed(g)
    if not _three_connected(sg.graph):
        return None, _skip("not 3-connected")
    if not _nonbipartite(sg):
        return None, _skip("bipartite")
    return build_anchored(sg), None


def check_basic_2conn(g: GraphLike) -> Outcome:
    """With a 2-connected remainder H, basic cycles number at least (t+1)m."""
    inst, skip = _anchored_or_skip(g)
    if skip:
        return skip
    if not is_two_connected(inst.h.graph):
        return _skip("remainder H is not 2-connected")
    return _basic_outcome(inst, (inst.t + 1) * inst.m, {"kind": "2-connected"})


def check_basic_endblocks(g: GraphLike) -> Outcome:
    """With k >= 2 end-blocks in H, basic cycles number at least
    (m-k)(t+k) + ceil(k/2)."""
    inst, skip = _anchored_or_skip(g)
    if skip:
        return skip
    hg = inst.h.graph
    if hg.n < 2 or is_two_connected(hg):
        return _skip("H has no end-block structure")
    k = len(block_tree(hg).end_blocks())
    if k < 2:
        return _skip(f"H has {k} end-block(s); bound needs k >= 2")
    m, t = inst.m, inst.t
    bound = (m - k) * (t + k) + (k + 1) // 2
    return _basic_outcome(inst, bound, {"kind": "end-blocks", "k": k})


def _basic_outcome(inst, bound: int, extra: dict) -> Outcome:
    bc = basic_cycles(inst)
    anchor_edges = frozenset(inst.anchor.edges)
    anchor_excluded = all(c.edge_set() != anchor_edges for c in bc.odd)
    shadows_match = len(bc.even) == len(bc.odd)
    witness = {
        "anchor": list(inst.anchor_vertices),
        "m": inst.m,
        "t": inst.t,
        "even_shadows": len(bc.even),
        **extra,
    }
    return Outcome(
        status="ok",
        measured=len(bc.odd),
        bound_num=bound,
        extra_ok=anchor_excluded and shadows_match,
        witness=witness,
    )


def check_block_path_product(g: GraphLike) -> Outcome:
    """(a,b)-paths in H are at least the product of t(B)+1 over the block path."""
    inst, skip = _anchored_or_skip(g)
    if skip:
        return skip
    h = inst.h
    if h.graph.n < 2:
        return _skip("H has fewer than two vertices")
    from .decomp import block_path  # local import keeps module top tidy

    worst = None
    for i in range(h.graph.n):
        for j in range(i + 1, h.graph.n):
            bound = prod(
                item.t + 1
                for item in block_path(h.graph, i, j)
                if isinstance(item, Block)
            )
            even, odd = count_paths_by_parity(h, i, j)
            count = even + odd
            if worst is None or count - bound < worst[0] - worst[1]:
                worst = (count, bound, inst.h_labels[i], inst.h_labels[j])
    count, bound, a, b = worst
    return Outcome(
        status="ok",
        measured=count,
        bound_num=bound,
        witness={"pair": [a, b], "anchor": list(inst.anchor_vertices)},
    )


def check_parity_vertex(g: GraphLike) -> Outcome:
    """Through any vertex whose deletion leaves the graph non-bipartite, a
    3-connected non-bipartite graph carries >= t cycles of each parity."""
    sg = as_signed(g)
    if not _three_connected(sg.graph):
        return _skip("not 3-connected")
    eligible = [
        x
        for x in range(sg.n)
        if is_bipartite_signed(sg.without_vertices((x,))[0]) is None
    ]
    if not eligible:
        return _skip("no vertex deletion leaves an odd cycle")
    t = t_value(sg.graph)
    per_vertex = {x: [0, 0] for x in eligible}
    from .cycles import _cycle_vertex_seqs, get_budget  # single enumeration pass

    for seq in _cycle_vertex_seqs(sg.graph, get_budget(None)):
        p = sg.walk_parity(seq + (seq[0],))
        for x in seq:
            if x in per_vertex:
                per_vertex[x][p] += 1
    worst_x = min(eligible, key=lambda x: (min(per_vertex[x]), x))
    return Outcome(
        status="ok",
        measured=min(per_vertex[worst_x]),
        bound_num=t,
        witness={
            "vertex": worst_x,
            "even": per_vertex[worst_x][0],
            "odd": per_vertex[worst_x][1],
            "eligible": len(eligible),
        },
    )


def check_parity_pair(g: GraphLike) -> Outcome:
    """For pairs x, y with both vertex deletions non-bipartite, a 3-connected
    graph has >= t-1 (x,y)-paths of each parity, the edge xy excluded."""
    sg = as_signed(g)
    pg = sg.graph
    if not _three_connected(pg):
        return _skip("not 3-connected")
    good = [
        x
        for x in range(pg.n)
        if is_bipartite_signed(sg.without_vertices((x,))[0]) is None
    ]
    if len(good) < 2:
        return _skip("no eligible vertex pair")
    t = t_value(pg)
    worst = None
    for ai in range(len(good)):
        for bi in range(ai + 1, len(good)):
            x, y = good[ai], good[bi]
            even, odd = count_paths_by_parity(sg, x, y)
            if pg.has_edge(x, y):
                p = sg.parity(x, y)
                if p == 0:
                    even -= 1
                else:
                    odd -= 1
            low = min(even, odd)
            if worst is None or low < worst[0]:
                worst = (low, x, y, even, odd)
    low, x, y, even, odd = worst
    return Outcome(
        status="ok",
        measured=low,
        bound_num=t - 1,
        witness={"pair": [x, y], "even": even, "odd": odd},
    )


def _match_apex_filter(sg: SignedGraph):
    """Recognize the apex-over-even-cycle parity pattern; returns
    (apex, special vertex) or None."""
    g = sg.graph
    n = g.n
    if n < 5 or n % 2 == 0:
        return None
    for apex in range(n):
        if g.degree(apex) != n - 1:
            continue
        rim, labels = g.without_vertices((apex,))
        if rim.m != rim.n or any(rim.degree(v) != 2 for v in range(rim.n)):
            continue
        if not rim.is_connected() or rim.n % 2 != 0:
            continue
        if any(
            sg.parity(labels[u], labels[v]) != 1 for u, v in rim.edges
        ):
            continue
        side = [0] * rim.n
        order = [0]
        prev = None
        cur = 0
        for step in range(1, rim.n):
            nxt = [w for w in rim.adj[cur] if w != prev][0]
            side[nxt] = step % 2
            prev, cur = cur, nxt
        class_a = {labels[v] for v in range(rim.n) if side[v] == 0}
        class_b = {labels[v] for v in range(rim.n) if side[v] == 1}
        zero = {
            u
            for u in class_a | class_b
            if sg.parity(apex, u) == 0
        }
        for cls in (class_a, class_b):
            if zero <= cls and len(zero) == len(cls) - 1:
                special = next(iter(cls - zero))
                return apex, special
    return None


def check_apex_parity(g: GraphLike) -> Outcome:
    """In the apex parity construction every odd cycle uses the one parity-1
    apex-to-B edge, so the odd count is at most 2t."""
    sg = as_signed(g)
    match = _match_apex_filter(sg)
    if match is None:
        return _skip("not an apex-over-even-cycle parity construction")
    apex, special = match
    e = canon_edge(apex, special)
    from .cycles import enumerate_cycles

    odd = enumerate_cycles(sg, parity_filter=1)
    all_through = all(e in c.edge_set() for c in odd)
    t = t_value(sg.graph)
    return Outcome(
        status="ok",
        measured=len(odd),
        bound_num=2 * t,
        relation="le",
        extra_ok=all_through,
        witness={"apex": apex, "special_edge": list(e), "all_through_edge": all_through},
    )


def check_two_cut_split(g: GraphLike) -> Outcome:
    """Every 2-cut of a 4-critical graph certifies the full decomposition:
    non-edge cut, two sides, no shared neighbor on the contracted side,
    both derived graphs 4-critical, and the t identity."""
    pg = _plain(g)
    if not _four_critical(pg):
        return _skip("not 4-critical")
    try:
        cuts = two_cuts(pg)
    except CritGraphError:
        cuts = []
    if not cuts:
        return _skip("3-connected: no 2-cut")
    ok = 0
    detail = None
    for cut in cuts:
        split = two_cut_split(pg, 4, cut.vertices)
        if split.ok:
            ok += 1
        elif detail is None:
            detail = {
                "cut": list(cut.vertices),
                "failed": [k for k, v in split.checks.items() if not v],
            }
    witness = {"cuts": len(cuts)}
    if detail:
        witness["first_failure"] = detail
    else:
        chosen = two_cut_split(pg, 4)
        witness["min_cut"] = list(chosen.cut)
        witness["case"] = chosen.case
    return Outcome(
        status="ok", measured=ok, bound_num=len(cuts), relation="eq", witness=witness
    )


CHECKS: dict[str, tuple] = {
    "t-additivity": (check_t_additivity, "t(G) equals the sum of block t values"),
    "block-path-count": (
        check_block_path_count,
        "within each block, #(x,y)-paths >= t(B)+1",
    ),
    "edge-density": (check_edge_density, "4-critical: 3e >= 5n-2"),
    "family-binomial": (
        check_family_binomial,
        "k-critical: C(f_{k-1}, k-2) >= e",
    ),
    "odd-linear-critical": (
        check_odd_linear_critical,
        "4-critical: odd cycles >= 2t-2, equality only at K4",
    ),
    "odd-linear-3conn": (
        check_odd_linear_3conn,
        "3-connected non-bipartite: odd cycles >= 2t-2",
    ),
    "odd-quadratic-critical": (
        check_odd_quadratic_critical,
        "4-critical: 50*odd >= t^2",
    ),
    "odd-quadratic-3conn": (
        check_odd_quadratic_3conn,
        "3-connected non-bipartite: 50*odd >= t^2",
    ),
    "even-quadratic": (
        check_even_quadratic,
        "4-critical or 3-connected: 50*even >= t^2",
    ),
    "basic-2conn": (
        check_basic_2conn,
        "anchored, H 2-connected: basic cycles >= (t+1)m",
    ),
    "basic-endblocks": (
        check_basic_endblocks,
        "anchored, k>=2 end-blocks: basic cycles >= (m-k)(t+k)+ceil(k/2)",
    ),
    "block-path-product": (
        check_block_path_product,
        "(a,b)-paths in H >= prod(t(B)+1) over the block path",
    ),
    "parity-vertex": (
        check_parity_vertex,
        "3-connected: >= t cycles of each parity through eligible vertices",
    ),
    "parity-pair": (
        check_parity_pair,
        "3-connected: >= t-1 (x,y)-paths of each parity for eligible pairs",
    ),
    "apex-parity": (
        check_apex_parity,
        "apex parity construction: all odd cycles share one edge, count <= 2t",
    ),
    "two-cut-split": (
        check_two_cut_split,
        "4-critical with a 2-cut: full decomposition certificate",
    ),
}


def _relation_holds(measured: int, num: int, den: int, relation: str) -> bool:
    lhs = measured * den
    if relation == "ge":
        return lhs >= num
    if relation == "le":
        return lhs <= num
    if relation == "eq":
        return lhs == num
    raise ValueError(f"unknown relation {relation!r}")


def run_check(name: str, g: GraphLike) -> CheckReport:
    """Run one named check; SKIPPED when hypotheses fail, FAILED only on a
    genuine bound violation."""
    if name not in CHECKS:
        raise UnknownCheckError(
            f"unknown check {name!r}; known: {', '.join(sorted(CHECKS))}"
        )
    fn = CHECKS[name][0]
    pg = _plain(g)
    report = CheckReport(graph=graph_id(g), n=pg.n, m=pg.m, check=name)
    start = time.perf_counter()
    try:
        outcome = fn(g)
        if outcome.status == "skip":
            report.status = "skip"
            report.witness = outcome.witness
        else:
            holds = _relation_holds(
                outcome.measured,
                outcome.bound_num,
                outcome.bound_den,
                outcome.relation,
            )
            report.status = "pass" if (holds and outcome.extra_ok) else "fail"
            report.measured = outcome.measured
            report.bound_num = outcome.bound_num
            report.bound_den = outcome.bound_den
            report.relation = outcome.relation
            report.witness = outcome.witness
    except CritGraphError as exc:
        report.status = "error"
        report.error = f"{type(exc).__name__}: {exc}"
    report.seconds = time.perf_counter() - start
    return report


@dataclass
class SweepResult:
    reports: list[CheckReport]
    counts: dict[str, int]

    @property
    def ok(self) -> bool:
        return self.counts.get("fail", 0) == 0 and self.counts.get("error", 0) == 0

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1


def _sweep_worker(args) -> list[dict]:
    g, spec, names = args
    if not spec.predicate()(g):
        return []
    return [run_check(name, g).to_json() for name in names]


def sweep(
    spec: CorpusSpec,
    checks: list[str],
    jobs: int = 1,
    out: str | None = None,
) -> SweepResult:
    """Run the named checks over every family member; any fail or error makes
    the exit code nonzero. The report content is independent of `jobs`."""
    for name in checks:
        if name not in CHECKS:
            raise UnknownCheckError(f"unknown check {name!r}")
    raw = CorpusSpec(family="connected", max_n=spec.max_n, source=spec.source)
    stream = corpus(raw)
    if jobs > 1:
        tasks = ((g, spec, checks) for g in stream)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = pool.map(_sweep_worker, tasks, chunksize=16)
            rows = [r for chunk in chunks for r in chunk]
    else:
        rows = [r for g in stream for r in _sweep_worker((g, spec, checks))]
    rows.sort(key=lambda r: (r["n"], r["graph"], r["check"]))
    reports = [CheckReport(**row) for row in rows]
    counts: dict[str, int] = {"pass": 0, "fail": 0, "skip": 0, "error": 0}
    for r in reports:
        counts[r.status] = counts.get(r.status, 0) + 1
    if out:
        with open(out, "w") as fh:
            for row in rows:
                fh.write(json.dumps(row, sort_keys=True) + "\n")
    return SweepResult(reports=reports, counts=counts)
