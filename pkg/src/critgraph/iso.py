"""Canonical forms for small graphs via refinement plus individualization.

Used for isomorphism-free corpus generation and for stable graph ids in
reports. Exponential in the worst case but cheap at n <= 10, which is all
the exhaustive sweeps need.
"""

from __future__ import annotations

import hashlib

from .graph import Graph, SignedGraph


def _refine(n: int, masks: tuple[int, ...], colors: list[int]) -> list[int]:
    """Refine to the coarsest stable (equitable) coloring below `colors`.

    Color values are dense ints ordered by (previous color, neighbor-color
    signature), so the cell order is isomorphism-invariant.
    """
    while True:
        sigs = []
        for v in range(n):
            counts: dict[int, int] = {}
            mv = masks[v]
            while mv:
                w = (mv & -mv).bit_length() - 1
                mv &= mv - 1
                cw = colors[w]
                counts[cw] = counts.get(cw, 0) + 1
            sigs.append((colors[v], tuple(sorted(counts.items()))))
        palette = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [palette[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _cells(n: int, colors: list[int]) -> list[list[int]]:
    by: dict[int, list[int]] = {}
    for v in range(n):
        by.setdefault(colors[v], []).append(v)
    return [by[c] for c in sorted(by)]


def _encode(g: Graph, order: list[int]) -> int:
    bits = 0
    for i, u in enumerate(order):
        mu = g.masks[u]
        for v in order[i + 1:]:
            bits = bits << 1 | (mu >> v & 1)
    return bits


def _uniform(g: Graph, cells: list[list[int]]) -> bool:
    """True if permuting within every non-singleton cell cannot change the code."""
    for c in cells:
        if len(c) == 1:
            continue
        rep = c[0]
        mrep = g.masks[rep]
        for d in cells:
            cnt = sum(1 for w in d if mrep >> w & 1)
            limit = len(d) - 1 if d is c else len(d)
            if cnt != 0 and cnt != limit:
                return False
    return True


def _canonical_order(g: Graph) -> list[int]:
    n = g.n
    if n <= 1:
        return list(range(n))
    best: list = [None, None]  # code, order

    def consider(order: list[int]) -> None:
        code = _encode(g, order)
        if best[0] is None or code < best[0] or (code == best[0] and order < best[1]):
            best[0], best[1] = code, order

    def rec(colors: list[int]) -> None:
        cells = _cells(n, colors)
        target = next((c for c in cells if len(c) > 1), None)
        if target is None or _uniform(g, cells):
            consider([v for cell in cells for v in sorted(cell)])
            return
        for v in target:
            marked = [colors[u] * 2 + (0 if u == v else 1) for u in range(n)]
            rec(_refine(n, g.masks, marked))

    rec(_refine(n, g.masks, [0] * n))
    return best[1]


def canonical_form(g: Graph) -> bytes:
    """Bytes identical for isomorphic graphs and distinct otherwise."""
    order = _canonical_order(g)
    code = _encode(g, order)
    nbits = g.n * (g.n - 1) // 2
    return bytes([g.n]) + code.to_bytes((nbits + 7) // 8 or 1, "big")


def canonical_graph(g: Graph) -> Graph:
    """The canonically relabeled copy (stable representative of the iso class)."""
    order = _canonical_order(g)
    perm = {old: i for i, old in enumerate(order)}
    return g.relabeled(perm)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and canonical_form(g) == canonical_form(h)


def graph_id(g: Graph | SignedGraph) -> str:
    """Short stable id for reports.

    Plain graphs hash their canonical form, so isomorphic inputs share an
    id. Signed graphs hash the labeled edge/parity data as given.
    """
    if isinstance(g, SignedGraph):
        payload = repr((g.n, g.graph.edges, tuple(sorted(g.parities.items())))).encode()
        tag = "s"
    else:
        payload = canonical_form(g)
        tag = "g"
    return tag + hashlib.sha1(payload).hexdigest()[:12]
