"""Readers and writers: graph6 lines and plain edge-list files.

Edge-list format: first line "n m", then m lines "u v" (plain) or "u v p"
with p in {0,1} (signed). All parsers reject malformed input with
line-numbered errors.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .errors import ParseError
from .graph import Graph, SignedGraph, canon_edge

_G6_HEADER = ">>graph6<<"


def _g6_size(line: str, lineno: int) -> tuple[int, int]:
    """Decode the leading N(n) field; returns (n, chars consumed)."""
    c0 = ord(line[0])
    if c0 == 126:
        if len(line) < 4:
            raise ParseError("truncated graph6 size field", lineno)
        if ord(line[1]) == 126:
            raise ParseError("graph6 sizes above 258047 are not supported", lineno)
        n = 0
        for ch in line[1:4]:
            v = ord(ch) - 63
            if not 0 <= v < 64:
                raise ParseError(f"invalid graph6 byte {ch!r}", lineno)
            n = n << 6 | v
        return n, 4
    if not 63 <= c0 <= 125:
        raise ParseError(f"invalid graph6 size byte {line[0]!r}", lineno)
    return c0 - 63, 1


def graph6_decode(line: str, lineno: int = 1) -> Graph:
    """Decode one graph6 line into a Graph."""
    line = line.strip()
    if line.startswith(_G6_HEADER):
        line = line[len(_G6_HEADER):]
    if not line:
        raise ParseError("empty graph6 line", lineno)
    n, at = _g6_size(line, lineno)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = line[at:]
    if len(body) != nbytes:
        raise ParseError(
            f"graph6 body has {len(body)} chars, expected {nbytes} for n={n}", lineno
        )
    bits = 0
    for ch in body:
        v = ord(ch) - 63
        if not 0 <= v < 64:
            raise ParseError(f"invalid graph6 byte {ch!r}", lineno)
        bits = bits << 6 | v
    total = nbytes * 6
    if total > nbits and bits & ((1 << (total - nbits)) - 1):
        raise ParseError("nonzero padding bits in graph6 body", lineno)
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits >> (total - 1 - idx) & 1:
                edges.append((u, v))
            idx += 1
    return Graph(n, edges)


def graph6_encode(g: Graph) -> str:
    """Encode a Graph as one graph6 line (no trailing newline)."""
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = chr(126) + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    else:
        raise ValueError("graph6 sizes above 258047 are not supported")
    nbits = n * (n - 1) // 2
    bits = 0
    idx = 0
    for v in range(1, n):
        for u in range(v):
            bits = bits << 1 | (1 if g.has_edge(u, v) else 0)
            idx += 1
    pad = (-nbits) % 6
    bits <<= pad
    body = []
    for i in range((nbits + pad) // 6 - 1, -1, -1):
        body.append(chr((bits >> (6 * i) & 63) + 63))
    return head + "".join(body)


def read_graph6(stream: TextIO) -> Iterator[Graph]:
    """Yield one Graph per non-empty line."""
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line:
            continue
        yield graph6_decode(line, lineno)


def write_graph6(stream: TextIO, graphs: Iterable[Graph]) -> None:
    for g in graphs:
        stream.write(graph6_encode(g) + "\n")


def _split_ints(line: str, lineno: int, want: tuple[int, ...]) -> list[int]:
    parts = line.split()
    if len(parts) not in want:
        raise ParseError(
            f"expected {' or '.join(map(str, want))} fields, got {len(parts)}", lineno
        )
    out = []
    for p in parts:
        try:
            out.append(int(p))
        except ValueError:
            raise ParseError(f"not an integer: {p!r}", lineno) from None
    return out


def read_edge_list(stream: TextIO) -> Graph | SignedGraph:
    """Parse an edge-list file; returns SignedGraph if any line carries a parity.

    Lines starting with '#' and blank lines are skipped (they still count
    for line numbering).
    """
    n = m = None
    edges: list[tuple[int, int]] = []
    parity: dict[tuple[int, int], int] = {}
    signed = None
    header_line = 0
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            vals = _split_ints(line, lineno, (2,))
            n, m = vals
            if n < 0 or m < 0:
                raise ParseError("n and m must be non-negative", lineno)
            header_line = lineno
            continue
        vals = _split_ints(line, lineno, (2, 3))
        row_signed = len(vals) == 3
        if signed is None:
            signed = row_signed
        elif signed != row_signed:
            raise ParseError("mixed signed and unsigned edge lines", lineno)
        u, v = vals[0], vals[1]
        if u == v:
            raise ParseError(f"loop at vertex {u}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range [0, {n})", lineno)
        e = canon_edge(u, v)
        if e in parity or (not signed and e in set(edges)):
            raise ParseError(f"duplicate edge {e}", lineno)
        if signed:
            p = vals[2]
            if p not in (0, 1):
                raise ParseError(f"parity must be 0 or 1, got {p}", lineno)
            parity[e] = p
        edges.append(e)
    if n is None:
        raise ParseError("missing 'n m' header line", 1)
    if len(edges) != m:
        raise ParseError(
            f"header declared {m} edges but file has {len(edges)}", header_line
        )
    g = Graph(n, edges)
    if signed:
        return SignedGraph(g, parity)
    return g


def write_edge_list(stream: TextIO, g: Graph | SignedGraph) -> None:
    if isinstance(g, SignedGraph):
        stream.write(f"{g.n} {g.graph.m}\n")
        for u, v in g.graph.edges:
            stream.write(f"{u} {v} {g.parities[(u, v)]}\n")
    else:
        stream.write(f"{g.n} {g.m}\n")
        for u, v in g.edges:
            stream.write(f"{u} {v}\n")
