"""Matplotlib renderings for analysis reports.

Figures summarize report outcomes and component statistics; they are a
side output next to the deterministic JSON/text report, never a data
source.  Drawing the Cayley graphs themselves is out of scope.
"""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.patches import Patch

OUTCOME_COLORS = {
    "pass": "#2f9e44",
    "finding": "#e8a117",
    "skipped": "#94a3ad",
    "fail": "#d64545",
}


def render_outcome_matrix(report, path) -> None:
    """One horizontal bar per check, colored by outcome."""
    entries = report.entries
    if not entries:
        return
    names = [e.name for e in entries]
    colors = [OUTCOME_COLORS.get(e.outcome, "#666666") for e in entries]
    height = max(2.0, 0.28 * len(entries) + 1.2)
    fig, ax = plt.subplots(figsize=(8, height))
    ys = list(range(len(entries)))[::-1]
    ax.barh(ys, [1.0] * len(entries), color=colors, edgecolor="white", height=0.8)
    ax.set_yticks(ys)
    ax.set_yticklabels(names, fontsize=7)
    ax.set_xlim(0, 1)
    ax.set_xticks([])
    ax.set_title(f"{report.command}: verdict {report.verdict}", fontsize=10)
    seen = []
    for outcome in ("pass", "finding", "skipped", "fail"):
        if any(e.outcome == outcome for e in entries):
            seen.append(Patch(facecolor=OUTCOME_COLORS[outcome], label=outcome))
    if seen:
        ax.legend(handles=seen, loc="lower right", fontsize=7)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_component_sizes(sizes, path, title: str) -> None:
    """Bar chart of connected-component sizes."""
    fig, ax = plt.subplots(figsize=(6, 3.5))
    xs = list(range(len(sizes)))
    ax.bar(xs, sizes, color="#3a6ea5")
    ax.set_xlabel("component")
    ax.set_ylabel("vertices")
    ax.set_title(title, fontsize=10)
    if len(xs) <= 20:
        ax.set_xticks(xs)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_report_figures(report, outdir) -> list[str]:
    """Write the standard figures for a report; returns the paths written."""
    os.makedirs(outdir, exist_ok=True)
    written = []
    matrix_path = os.path.join(outdir, f"{report.command}_outcomes.png")
    render_outcome_matrix(report, matrix_path)
    written.append(matrix_path)
    for entry in report.entries:
        sizes = entry.details.get("sizes")
        if isinstance(sizes, list) and sizes:
            safe = entry.name.replace("/", "_").replace(" ", "_").replace("=", "")
            comp_path = os.path.join(outdir, f"{safe}_components.png")
            render_component_sizes(sizes, comp_path, entry.name)
            written.append(comp_path)
            break
    return written
