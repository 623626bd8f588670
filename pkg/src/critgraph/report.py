"""Render sweep reports: summary CSV plus matplotlib figures per check.

Figures land next to (or in a chosen directory alongside) the JSONL the
sweep wrote: one measured-vs-bound scatter per check and one stacked
status summary.
"""

from __future__ import annotations

import csv
import json
import os
from collections import defaultdict

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

_STATUS_COLORS = {
    "pass": "#2a9d4e",
    "fail": "#d62728",
    "skip": "#b0b0b0",
    "error": "#ff7f0e",
}


def load_jsonl(path: str) -> list[dict]:
    rows = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if line:
                rows.append(json.loads(line))
    return rows


def write_summary_csv(rows: list[dict], path: str) -> None:
    by_check: dict[str, dict[str, int]] = defaultdict(
        lambda: {"pass": 0, "fail": 0, "skip": 0, "error": 0}
    )
    for r in rows:
        by_check[r["check"]][r["status"]] += 1
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["check", "pass", "fail", "skip", "error"])
        for check in sorted(by_check):
            c = by_check[check]
            w.writerow([check, c["pass"], c["fail"], c["skip"], c["error"]])


def _summary_figure(rows: list[dict], path: str) -> None:
    by_check: dict[str, dict[str, int]] = defaultdict(
        lambda: {"pass": 0, "fail": 0, "skip": 0, "error": 0}
    )
    for r in rows:
        by_check[r["check"]][r["status"]] += 1
    checks = sorted(by_check)
    fig, ax = plt.subplots(figsize=(max(4.0, 0.9 * len(checks) + 2), 3.2))
    bottom = [0] * len(checks)
    for status in ("pass", "fail", "error", "skip"):
        vals = [by_check[c][status] for c in checks]
        ax.bar(checks, vals, bottom=bottom, label=status, color=_STATUS_COLORS[status])
        bottom = [b + v for b, v in zip(bottom, vals)]
    ax.set_ylabel("graphs")
    ax.set_title("check outcomes")
    ax.legend(fontsize=8)
    plt.setp(ax.get_xticklabels(), rotation=30, ha="right", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _scatter_figure(check: str, rows: list[dict], path: str) -> None:
    fig, ax = plt.subplots(figsize=(4.2, 4.0))
    for status in ("pass", "fail", "error"):
        xs, ys = [], []
        for r in rows:
            if r["status"] != status or r["measured"] is None:
                continue
            xs.append(r["bound_num"] / max(r["bound_den"], 1))
            ys.append(r["measured"])
        if xs:
            ax.scatter(xs, ys, s=14, alpha=0.7, label=status,
                       color=_STATUS_COLORS[status])
    lims = ax.get_xlim() + ax.get_ylim()
    hi = max(1, *lims)
    lo = min(0, *lims)
    ax.plot([lo, hi], [lo, hi], lw=0.8, ls="--", color="black", label="bound")
    ax.set_xlabel("bound")
    ax.set_ylabel("measured")
    relation = rows[0].get("relation", "ge")
    ax.set_title(f"{check} (measured {relation} bound)", fontsize=10)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_figures(rows: list[dict], out_dir: str, stem: str = "report") -> list[str]:
    """Write the summary CSV, the status figure, and one scatter per check.

    Returns the paths written.
    """
    os.makedirs(out_dir, exist_ok=True)
    written = []
    csv_path = os.path.join(out_dir, f"{stem}_summary.csv")
    write_summary_csv(rows, csv_path)
    written.append(csv_path)
    fig_path = os.path.join(out_dir, f"{stem}_summary.png")
    _summary_figure(rows, fig_path)
    written.append(fig_path)
    by_check: dict[str, list[dict]] = defaultdict(list)
    for r in rows:
        if r["measured"] is not None:
            by_check[r["check"]].append(r)
    for check in sorted(by_check):
        safe = check.replace("/", "-")
        path = os.path.join(out_dir, f"{stem}_{safe}.png")
        _scatter_figure(check, by_check[check], path)
        written.append(path)
    return written
