"""Matplotlib figures for the CLI report path.

matplotlib is imported lazily with the non-interactive Agg backend so the
core library never needs it.
"""

from __future__ import annotations

import math
from typing import Optional, Sequence

from .enumeration import CountTable, FrequencyReport
from .generation import WordList
from .rungraph import RunGraph


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def _save(fig, out_path: str) -> str:
    fig.tight_layout()
    fig.savefig(out_path, dpi=120)
    _pyplot().close(fig)
    return out_path


def plot_series(table: CountTable, out_path: str) -> str:
    """Coefficient plot: a line per series, a heat map for bivariate tables."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(6, 4))
    title = f"{table.kind} (q={table.q})" if table.q is not None else f"fib (k={table.k})"
    if table.bivariate:
        size = table.n_max + 1
        grid = [[float("nan")] * size for _ in range(size)]
        for n, row in enumerate(table.coeffs):
            for k, v in enumerate(row):
                grid[k][n] = math.log10(v) if v > 0 else float("nan")
        im = ax.imshow(grid, origin="lower", aspect="auto", cmap="viridis")
        fig.colorbar(im, ax=ax, label="log10 coefficient")
        ax.set_xlabel("length n")
        ax.set_ylabel("number of ones k")
    else:
        ns = list(range(table.n_max + 1))
        values = list(table.coeffs)
        ax.plot(ns, values, marker="o", markersize=3)
        if all(v > 0 for v in values[1:]) and max(values) > 1000:
            ax.set_yscale("log")
        ax.axhline(0, color="grey", linewidth=0.5)
        ax.set_xlabel("n")
        ax.set_ylabel("coefficient")
    ax.set_title(title)
    return _save(fig, out_path)


def plot_frequency(reports: Sequence[FrequencyReport], out_path: str) -> str:
    """Ones frequency of ``W^q_n`` and ``B_n(1^(q+1))`` against ``n``."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(6, 4))
    ns = [r.n for r in reports]
    ax.plot(ns, [float(r.u_ratio) for r in reports], marker=".", label="q-decreasing")
    ax.plot(ns, [float(r.v_ratio) for r in reports], marker=".", label="avoiding 1^(q+1)")
    if reports and reports[0].q == 1:
        ax.axhline((5 - math.sqrt(5)) / 10, color="grey", linestyle=":", label="q=1 limit")
    ax.set_xlabel("n")
    ax.set_ylabel("ones frequency")
    ax.set_title(f"ones frequency, q={reports[0].q}" if reports else "ones frequency")
    ax.legend()
    return _save(fig, out_path)


def plot_run_graph(g: RunGraph, out_path: str, path: Optional[WordList] = None) -> str:
    """Draw ``R_n`` with vertices laid out along ``path`` (or sorted order)."""
    from matplotlib.patches import FancyArrowPatch

    plt = _pyplot()
    order = list(path) if path is not None else g.sorted_vertices()
    pos = {w: (i, 0.0) for i, w in enumerate(order)}
    on_path = set()
    if path is not None:
        for a, b in zip(order, order[1:]):
            on_path.add(frozenset((a, b)))
    fig, ax = plt.subplots(figsize=(max(4, 0.9 * len(order)), 3))
    for u, v in g.sorted_edges():
        (x0, y0), (x1, y1) = pos[u], pos[v]
        if frozenset((u, v)) in on_path:
            continue
        patch = FancyArrowPatch((x0, y0), (x1, y1), arrowstyle="-",
                                connectionstyle="arc3,rad=-0.4", linestyle="--",
                                color="grey")
        ax.add_patch(patch)
    for a, b in zip(order, order[1:]):
        if frozenset((a, b)) in on_path:
            ax.add_patch(FancyArrowPatch(pos[a], pos[b], arrowstyle="-|>",
                                         mutation_scale=12, color="tab:red"))
    ax.scatter([p[0] for p in pos.values()], [0] * len(pos), color="black", zorder=3)
    for w, (x, y) in pos.items():
        ax.annotate(str(w), (x, y), textcoords="offset points", xytext=(0, -14),
                    ha="center", family="monospace", fontsize=8)
    ax.set_xlim(-0.7, len(order) - 0.3)
    ax.set_ylim(-1.2, 1.2)
    ax.axis("off")
    ax.set_title(f"R_{g.n}")
    return _save(fig, out_path)
