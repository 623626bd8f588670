"""Command-line interface.

Exit codes: 0 all requested checks pass, 1 any check fails, 2 usage or
parse errors. CRITGRAPH_BUDGET overrides the enumeration cap.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import io as gio
from .critical import chromatic_number, gallai_family, is_k_critical
from .cycles import (
    cycles_through_edge,
    enumerate_cycles,
    enumerate_paths,
    get_budget,
    nonseparating_induced_odd_cycle,
)
from .decomp import block_tree, ear_decomposition
from .errors import CritGraphError, ParseError
from .generators import FAMILIES, CorpusSpec, corpus
from .graph import SignedGraph, t_value
from .structure import basic_cycles, build_anchored, good_pairs
from .verify import CHECKS, run_check, sweep


def _load(path: str, fmt: str = "auto", index: int = 0):
    """Read a Graph or SignedGraph from a file or '-' (stdin)."""
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path) as fh:
            text = fh.read()
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines:
        raise ParseError("empty input", 1)
    if fmt == "auto":
        head = lines[0].split()
        fmt = "el" if len(head) in (2, 3) and all(_is_int(x) for x in head) else "g6"
    if fmt == "el":
        import io as _io

        return gio.read_edge_list(_io.StringIO(text))
    graphs = list(gio.read_graph6(_io_stream(text)))
    if not graphs:
        raise ParseError("no graph6 lines found", 1)
    if not 0 <= index < len(graphs):
        raise ParseError(f"graph index {index} out of range (file has {len(graphs)})")
    return graphs[index]


def _io_stream(text: str):
    import io as _io

    return _io.StringIO(text)


def _is_int(s: str) -> bool:
    try:
        int(s)
        return True
    except ValueError:
        return False


def _parse_vertices(spec: str) -> list[int]:
    try:
        return [int(x) for x in spec.replace(",", " ").split()]
    except ValueError:
        raise ParseError(f"expected comma-separated integers, got {spec!r}") from None


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _edge_json(e):
    return [int(e[0]), int(e[1])]


# ---------------------------------------------------------------------------
# subcommands


def cmd_gen(args) -> int:
    spec = CorpusSpec(
        family=args.family, max_n=args.max_n, k=args.k, source=args.source
    )
    out = open(args.out, "w") if args.out else sys.stdout
    try:
        for g in corpus(spec):
            if args.format == "g6":
                out.write(gio.graph6_encode(g) + "\n")
            else:
                gio.write_edge_list(out, g)
    finally:
        if args.out:
            out.close()
    return 0


def cmd_blocks(args) -> int:
    g = _load(args.input, args.format, args.index)
    pg = g.graph if isinstance(g, SignedGraph) else g
    bt = block_tree(pg)
    _emit(
        {
            "blocks": [
                {"vertices": list(b.vertices), "edges": [_edge_json(e) for e in b.edges]}
                for b in bt.blocks
            ],
            "cut_vertices": list(bt.cut_vertices),
            "incidence": [[bi, c] for bi, c in bt.incidence],
            "end_blocks": list(bt.end_blocks()),
        }
    )
    return 0


def cmd_ears(args) -> int:
    g = _load(args.input, args.format, args.index)
    pg = g.graph if isinstance(g, SignedGraph) else g
    anchor = _parse_vertices(args.anchor) if args.anchor else None
    dec = ear_decomposition(pg, anchor)
    _emit(
        {
            "ears": [list(e) for e in dec.ears],
            "anchor": list(dec.anchor) if dec.anchor else None,
            "t": len(dec),
        }
    )
    return 0


_PARITY = {"odd": 1, "even": 0}


def cmd_cycles(args) -> int:
    g = _load(args.input, args.format, args.index)
    parity = _PARITY[args.parity] if args.parity else None
    if args.through_edge:
        u, v = _parse_vertices(args.through_edge)
        cs = cycles_through_edge(g, (u, v), parity if parity is not None else 1)
    else:
        cs = enumerate_cycles(g, parity_filter=parity)
    payload = {
        "total": len(cs),
        "odd": cs.odd_count,
        "even": cs.even_count,
        "budget": get_budget(None),
    }
    if args.list:
        payload["cycles"] = [
            {"vertices": list(c.vertices), "parity": c.parity} for c in cs
        ]
    _emit(payload)
    return 0


def cmd_paths(args) -> int:
    g = _load(args.input, args.format, args.index)
    parity = _PARITY[args.parity] if args.parity else None
    ps = enumerate_paths(g, args.source, args.target, parity_filter=parity)
    payload = {
        "x": args.source,
        "y": args.target,
        "total": len(ps),
        "odd": ps.count(1),
        "even": ps.count(0),
        "has_direct_edge": ps.has_direct_edge,
        "budget": get_budget(None),
    }
    if args.list:
        payload["paths"] = [
            {"vertices": list(p.vertices), "parity": p.parity} for p in ps
        ]
    _emit(payload)
    return 0


def cmd_nonsep(args) -> int:
    g = _load(args.input, args.format, args.index)
    avoid = _parse_vertices(args.avoid) if args.avoid else None
    if avoid is not None and len(avoid) == 1:
        avoid = avoid[0]
    cycle = nonseparating_induced_odd_cycle(g, avoid, check=not args.unchecked)
    _emit(
        {
            "cycle": list(cycle.vertices),
            "length": cycle.length,
            "parity": cycle.parity,
            "budget": get_budget(None),
        }
    )
    return 0


def cmd_basic(args) -> int:
    g = _load(args.input, args.format, args.index)
    anchor = _parse_vertices(args.anchor) if args.anchor else None
    inst = build_anchored(g, anchor)
    bc = basic_cycles(inst)
    from .decomp import block_tree as bt_fn, is_two_connected

    hg = inst.h.graph
    bounds = {}
    ok = True
    if is_two_connected(hg):
        bound = (inst.t + 1) * inst.m
        bounds["two_connected"] = {"bound": bound, "pass": len(bc.odd) >= bound}
        ok = ok and len(bc.odd) >= bound
    elif hg.n >= 2:
        k = len(bt_fn(hg).end_blocks())
        if k >= 2:
            bound = (inst.m - k) * (inst.t + k) + (k + 1) // 2
            bounds["end_blocks"] = {
                "k": k,
                "bound": bound,
                "pass": len(bc.odd) >= bound,
            }
            ok = ok and len(bc.odd) >= bound
    _emit(
        {
            "anchor": list(inst.anchor_vertices),
            "m": inst.m,
            "t": inst.t,
            "good_pairs": len(good_pairs(inst)),
            "basic_odd": len(bc.odd),
            "even_shadows": len(bc.even),
            "bounds": bounds,
            "pass": ok,
        }
    )
    return 0 if ok else 1


def cmd_critical(args) -> int:
    g = _load(args.input, args.format, args.index)
    pg = g.graph if isinstance(g, SignedGraph) else g
    cert = is_k_critical(pg, args.k)
    payload = {
        "k": args.k,
        "critical": cert is not None,
        "chromatic_number": chromatic_number(pg),
        "n": pg.n,
        "m": pg.m,
    }
    if cert is not None:
        payload["t"] = t_value(pg)
        payload["min_degree_ok"] = cert.min_degree_ok
    _emit(payload)
    return 0 if cert is not None else 1


def cmd_gallai(args) -> int:
    g = _load(args.input, args.format, args.index)
    pg = g.graph if isinstance(g, SignedGraph) else g
    fam = gallai_family(pg, args.k)
    binom_ok = _family_binomial_ok(fam, pg)
    _emit(
        {
            "k": args.k,
            "family_size": fam.size,
            "per_edge_sizes": {str(e): len(ms) for e, ms in fam.per_edge.items()},
            "lists_distinct": fam.lists_distinct,
            "miss_claim_holds": fam.miss_claim_holds,
            "degenerate": fam.degenerate,
            "family_binomial_lower_bound_ok": binom_ok,
        }
    )
    return 0 if (fam.lists_distinct and fam.miss_claim_holds) else 1


def _family_binomial_ok(fam, pg) -> bool:
    from math import comb

    # the family is a lower bound on the true count, so this is the weaker,
    # certified form of the binomial inequality
    return comb(fam.size, fam.k - 2) >= pg.m


def cmd_verify(args) -> int:
    if args.verify_cmd == "one":
        g = _load(args.input, args.format, args.index)
        report = run_check(args.check, g)
        _emit(report.to_json())
        return 0 if report.status in ("pass", "skip") else 1
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    spec = CorpusSpec(
        family=args.family, max_n=args.max_n, k=args.k, source=args.source
    )
    result = sweep(spec, checks, jobs=args.jobs, out=args.out)
    if args.figures:
        from .report import render_figures

        rows = [r.to_json() for r in result.reports]
        render_figures(rows, args.figures)
    _emit({"counts": result.counts, "ok": result.ok, "out": args.out})
    return result.exit_code


def cmd_report(args) -> int:
    from .report import load_jsonl, render_figures

    rows = load_jsonl(args.jsonl)
    written = render_figures(rows, args.out_dir, stem=args.stem)
    _emit({"written": written})
    return 0


# ---------------------------------------------------------------------------


def _add_input_args(p, with_index: bool = True) -> None:
    p.add_argument("input", help="input file ('-' for stdin)")
    p.add_argument(
        "--format",
        choices=("auto", "g6", "el"),
        default="auto",
        help="input format: graph6 or edge list (default: sniff)",
    )
    if with_index:
        p.add_argument(
            "--index", type=int, default=0, help="which graph in a multi-line g6 file"
        )


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="critgraph",
        description="cycle-parity enumeration and critical-graph bound checks",
    )
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("gen", help="stream a graph corpus")
    p.add_argument("--family", choices=FAMILIES, default="connected")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--source", default=None, help="filter a graph6 file instead")
    p.add_argument("--format", choices=("g6", "el"), default="g6")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("blocks", help="block/cut-vertex decomposition as JSON")
    _add_input_args(p)
    p.set_defaults(fn=cmd_blocks)

    p = sub.add_parser("ears", help="ear decomposition as JSON")
    _add_input_args(p)
    p.add_argument("--anchor", default=None, help="comma-separated anchor cycle")
    p.set_defaults(fn=cmd_ears)

    p = sub.add_parser("cycles", help="cycle counts by parity")
    _add_input_args(p)
    p.add_argument("--parity", choices=("odd", "even"), default=None)
    p.add_argument("--through-edge", default=None, help="count cycles through 'u,v'")
    p.add_argument("--list", action="store_true", help="include the cycles themselves")
    p.set_defaults(fn=cmd_cycles)

    p = sub.add_parser("paths", help="simple path counts by parity")
    _add_input_args(p)
    p.add_argument("--source", dest="source", type=int, required=True)
    p.add_argument("--target", dest="target", type=int, required=True)
    p.add_argument("--parity", choices=("odd", "even"), default=None)
    p.add_argument("--list", action="store_true")
    p.set_defaults(fn=cmd_paths)

    p = sub.add_parser("nonsep", help="find a non-separating induced odd cycle")
    _add_input_args(p)
    p.add_argument("--avoid", default=None, help="vertex or comma-separated set")
    p.add_argument(
        "--unchecked",
        action="store_true",
        help="skip hypothesis checks; may report NotFound",
    )
    p.set_defaults(fn=cmd_nonsep)

    p = sub.add_parser("basic", help="anchored instance and basic-cycle bounds")
    _add_input_args(p)
    p.add_argument("--anchor", default=None, help="comma-separated anchor cycle")
    p.set_defaults(fn=cmd_basic)

    p = sub.add_parser("critical", help="certify k-criticality")
    _add_input_args(p)
    p.add_argument("--k", type=int, default=4)
    p.set_defaults(fn=cmd_critical)

    p = sub.add_parser("gallai", help="per-edge critical-subgraph family")
    _add_input_args(p)
    p.add_argument("--k", type=int, default=4)
    p.set_defaults(fn=cmd_gallai)

    p = sub.add_parser("verify", help="run bound checks")
    vsub = p.add_subparsers(dest="verify_cmd", required=True)

    ps = vsub.add_parser("sweep", help="checks over a whole corpus")
    ps.add_argument("--family", choices=FAMILIES, required=True)
    ps.add_argument("--max-n", type=int, required=True)
    ps.add_argument("--k", type=int, default=None)
    ps.add_argument("--source", default=None)
    ps.add_argument("--checks", required=True, help="comma-separated check names")
    ps.add_argument("--jobs", type=int, default=1)
    ps.add_argument("--out", default=None, help="JSONL report path")
    ps.add_argument("--figures", default=None, help="directory for figures + CSV")
    ps.set_defaults(fn=cmd_verify)

    po = vsub.add_parser("one", help="one check on one graph")
    po.add_argument("--check", required=True, choices=sorted(CHECKS))
    po.add_argument("--input", required=True)
    po.add_argument("--format", choices=("auto", "g6", "el"), default="auto")
    po.add_argument("--index", type=int, default=0)
    po.set_defaults(fn=cmd_verify)

    p = sub.add_parser("report", help="figures + summary CSV from a JSONL report")
    p.add_argument("jsonl")
    p.add_argument("--out-dir", required=True)
    p.add_argument("--stem", default="report")
    p.set_defaults(fn=cmd_report)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"critgraph: {exc}", file=sys.stderr)
        return 2
    except CritGraphError as exc:
        print(f"critgraph: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"critgraph: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
