"""Matplotlib figures written next to the reports (Agg backend, PNG files)."""

from __future__ import annotations

import math
from pathlib import Path
from typing import Iterable, Optional, Sequence

import matplotlib

matplotlib.use("Agg")
from matplotlib import pyplot as plt  # noqa: E402

from .graph import Graph  # noqa: E402

HIGHLIGHT = "tab:red"
PLAIN = "#a6c8e8"
GONE = "0.85"

# fixed metadata keeps repeated renders byte-stable
_PNG_META = {"Software": None}


def circle_layout(g: Graph) -> dict[int, tuple[float, float]]:
    n = max(g.n, 1)
    return {
        v: (math.cos(math.pi / 2 - 2 * math.pi * i / n), math.sin(math.pi / 2 - 2 * math.pi * i / n))
        for i, v in enumerate(g.vertices)
    }


def draw_graph(
    ax,
    g: Graph,
    highlight: Iterable[int] = (),
    faded: Iterable[int] = (),
    pos: Optional[dict] = None,
    title: str = "",
) -> None:
    hl, fd = frozenset(highlight), frozenset(faded)
    pos = pos or circle_layout(g)
    for u, v in g.edges():
        (x0, y0), (x1, y1) = pos[u], pos[v]
        if u in fd or v in fd:
            style = dict(color=GONE, lw=0.8, ls="--")
        elif u in hl and v in hl:
            style = dict(color=HIGHLIGHT, lw=2.0)
        else:
            style = dict(color="0.3", lw=0.8)
        ax.plot([x0, x1], [y0, y1], zorder=1, **style)
    for v in g.vertices:
        color = GONE if v in fd else HIGHLIGHT if v in hl else PLAIN
        x, y = pos[v]
        ax.scatter([x], [y], s=380, c=color, edgecolors="0.2", zorder=2)
        ax.text(x, y, g.label(v), ha="center", va="center", fontsize=9, zorder=3)
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title, fontsize=10)


def _save(fig, path) -> str:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=110, bbox_inches="tight", metadata=_PNG_META)
    plt.close(fig)
    return str(path)


def graph_figure(g: Graph, path, highlight=(), title: str = "") -> str:
    fig, ax = plt.subplots(figsize=(5, 5))
    draw_graph(ax, g, highlight=highlight, title=title)
    return _save(fig, path)


def polyclique_figure(g: Graph, trace, path, title: str = "") -> str:
    """Left: graph with interdicted vertices faded, surviving T highlighted.
    Right: remaining budget after each removal."""
    from .polyclique import InterdictPair, InterdictVertex

    removed = set(g.vertices) - set(trace.final_T)
    fig, (left, right) = plt.subplots(1, 2, figsize=(10, 4.6))
    draw_graph(left, g, highlight=trace.final_T, faded=removed,
               title=title or f"k={trace.k}: {trace.decision.value}, |T|={trace.final_T_size}")
    budget = [trace.initial_R]
    ticks = ["start"]
    for e in trace.steps:
        if isinstance(e, InterdictPair):
            budget.append(budget[-1] - e.cost)
            ticks.append(f"{g.label(e.u)},{g.label(e.v)}")
        elif isinstance(e, InterdictVertex):
            budget.append(budget[-1] - e.cost)
            ticks.append(g.label(e.v))
    right.step(range(len(budget)), budget, where="post", color="k")
    right.plot(range(len(budget)), budget, "o", color=HIGHLIGHT)
    right.set_xticks(range(len(budget)))
    right.set_xticklabels(ticks, rotation=45, fontsize=8)
    right.set_ylabel("remaining budget R")
    right.set_xlabel("removal")
    right.grid(True, ls=":", lw=0.5)
    return _save(fig, path)


def laplante_figure(g: Graph, found: Iterable[int], best: Iterable[int], path) -> str:
    fig, (left, right) = plt.subplots(1, 2, figsize=(10, 5))
    found, best = frozenset(found), frozenset(best)
    draw_graph(left, g, highlight=found, title=f"reported max {g.fmt_set(found)}")
    draw_graph(right, g, highlight=best, title=f"exact max {g.fmt_set(best)}")
    return _save(fig, path)


def sweep_figure(rows: Sequence[dict], path) -> str:
    ks = [r["k"] for r in rows]
    fig, (left, right) = plt.subplots(1, 2, figsize=(9, 3.8))
    left.plot(ks, [r["min_pair_cost"] for r in rows], "o-", label="min pair cost")
    left.plot(ks, [2 * k - 3 for k in ks], "k--", lw=0.8, label="2k-3")
    left.set_xlabel("k")
    left.legend(fontsize=8)
    right.bar(ks, [r["inner_min_pairs"] for r in rows], color=PLAIN, edgecolor="0.2")
    right.set_xlabel("k")
    right.set_ylabel("cheapest pairs inside C_k avoiding v, v'")
    for ax in (left, right):
        ax.grid(True, ls=":", lw=0.5)
        ax.set_xticks(ks)
    return _save(fig, path)


def lemma1_figure(rows: Sequence[dict], path) -> str:
    fig, ax = plt.subplots(figsize=(4.5, 4.5))
    xs = [r["non_isolated"] for r in rows]
    ys = [r["max_flow"] for r in rows]
    ax.scatter(xs, ys, s=18, c=PLAIN, edgecolors="0.2")
    top = max(xs + ys + [1])
    ax.plot([0, top], [0, top], "k--", lw=0.8)
    ax.set_xlabel("vertices with positive degree")
    ax.set_ylabel("max flow through G^H")
    ax.grid(True, ls=":", lw=0.5)
    return _save(fig, path)


def gh_figure(net, path) -> str:
    """Four columns: source, edge nodes, vertex nodes, sink."""
    cols = [[n for n in net.nodes if n.kind == kind] for kind in ("s", "e", "v", "t")]
    pos = {}
    for x, col in enumerate(cols):
        for i, node in enumerate(col):
            pos[node] = (x, -(i - (len(col) - 1) / 2))
    fig, ax = plt.subplots(figsize=(7, max(3, 0.35 * max(map(len, cols)))))
    for a in net.arcs:
        (x0, y0), (x1, y1) = pos[a.tail], pos[a.head]
        ax.annotate("", xy=(x1, y1), xytext=(x0, y0),
                    arrowprops=dict(arrowstyle="->", lw=1.4 if a.capacity == 2 else 0.7, color="0.3"))
    for node, (x, y) in pos.items():
        ax.text(x, y, str(node), ha="center", va="center", fontsize=7,
                bbox=dict(boxstyle="round", fc=PLAIN, ec="0.3"))
    ax.axis("off")
    return _save(fig, path)
