"""Matplotlib renderings of the drawable objects: pipe dreams, bumpless
pipe dreams, puzzles, and Bruhat interval Hasse diagrams.

Figures are written to files; nothing here touches an interactive
backend.
"""
from __future__ import annotations

import matplotlib
matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.patches import Arc, Polygon

from . import bruhat, perm
from .bpd import BumplessPipeDream
from .pipedream import PipeDream


def save(fig, path: str) -> str:
    fig.savefig(path, bbox_inches="tight", dpi=150)
    plt.close(fig)
    return path


def _pd_tile(ax, i: int, j: int, crossed: bool) -> None:
    # cell (i, j) drawn with row i going down
    x, y = j - 1, -i
    if crossed:
        ax.plot([x, x + 1], [y + 0.5, y + 0.5], color="tab:blue", lw=2)
        ax.plot([x + 0.5, x + 0.5], [y, y + 1], color="tab:blue", lw=2)
    else:
        ax.add_patch(Arc((x, y + 1), 1, 1, theta1=270, theta2=360,
                         color="tab:blue", lw=2))
        ax.add_patch(Arc((x + 1, y), 1, 1, theta1=90, theta2=180,
                         color="tab:blue", lw=2))


def draw_pipe_dream(D: PipeDream, path: str, title: str | None = None
                    ) -> str:
    w = D.permutation()
    n = max(len(w), max((i + j - 1 for i, j in D.crossings), default=1))
    fig, ax = plt.subplots(figsize=(0.6 * n + 1, 0.6 * n + 1))
    for i in range(1, n + 1):
        for j in range(1, n + 2 - i):
            _pd_tile(ax, i, j, (i, j) in D.crossings)
    for k in range(1, n + 1):
        ax.text(k - 0.5, 0.3, str(k), ha="center", fontsize=9)
        ax.text(-0.4, -k + 0.5, str(perm.act(w, k)), va="center", fontsize=9)
    ax.set_xlim(-0.8, n + 0.2)
    ax.set_ylim(-n - 0.2, 0.8)
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title)
    return save(fig, path)


def draw_bpd(D: BumplessPipeDream, path: str, title: str | None = None
             ) -> str:
    n = D.n
    fig, ax = plt.subplots(figsize=(0.6 * n + 1, 0.6 * n + 1))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            x, y = j - 1, -i
            t = D.tile(i, j)
            if t in "+-":
                ax.plot([x, x + 1], [y + 0.5, y + 0.5], color="tab:red", lw=2)
            if t in "+|":
                ax.plot([x + 0.5, x + 0.5], [y, y + 1], color="tab:red", lw=2)
            if t == "r":
                ax.add_patch(Arc((x + 1, y), 1, 1, theta1=90, theta2=180,
                                 color="tab:red", lw=2))
            if t == "j":
                ax.add_patch(Arc((x, y + 1), 1, 1, theta1=270, theta2=360,
                                 color="tab:red", lw=2))
    for i in range(n + 1):
        ax.plot([0, n], [-i, -i], color="0.85", lw=0.5, zorder=0)
        ax.plot([i, i], [-n, 0], color="0.85", lw=0.5, zorder=0)
    w = D.permutation()
    for k in range(1, n + 1):
        ax.text(k - 0.5, -n - 0.4, str(k), ha="center", fontsize=9)
        ax.text(n + 0.3, -k + 0.5, str(perm.act(w, k)), va="center",
                fontsize=9)
    ax.set_xlim(-0.4, n + 0.8)
    ax.set_ylim(-n - 0.8, 0.4)
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title)
    return save(fig, path)


def draw_pipe_dream_gallery(dreams, path: str, title: str | None = None,
                            cols: int = 5) -> str:
    dreams = sorted(dreams, key=lambda D: sorted(D.crossings))
    rows = (len(dreams) + cols - 1) // cols
    n = max((max((i + j - 1 for i, j in D.crossings), default=1)
             for D in dreams), default=1)
    n = max(n, max(len(D.permutation()) for D in dreams))
    fig, axes = plt.subplots(rows, cols,
                             figsize=(1.2 * cols * 0.6 * n,
                                      1.2 * rows * 0.6 * n))
    axes = [axes] if rows * cols == 1 else list(axes.flat)
    for ax in axes:
        ax.axis("off")
        ax.set_aspect("equal")
    for D, ax in zip(dreams, axes):
        for i in range(1, n + 1):
            for j in range(1, n + 2 - i):
                _pd_tile(ax, i, j, (i, j) in D.crossings)
        ax.set_xlim(-0.4, n + 0.2)
        ax.set_ylim(-n - 0.2, 0.4)
    if title:
        fig.suptitle(title)
    return save(fig, path)


def draw_hasse(interval: bruhat.BruhatInterval, path: str,
               title: str | None = None) -> str:
    levels: dict[int, list] = {}
    for v in sorted(interval.elements):
        levels.setdefault(perm.length(v), []).append(v)
    pos = {}
    for ell, vs in levels.items():
        for idx, v in enumerate(vs):
            pos[v] = (idx - (len(vs) - 1) / 2, ell)
    fig, ax = plt.subplots(
        figsize=(1.4 * max(len(vs) for vs in levels.values()) + 1,
                 0.9 * len(levels) + 1))
    for a, b in interval.cover_edges:
        xa, ya = pos[a]
        xb, yb = pos[b]
        ax.plot([xa, xb], [ya, yb], color="0.6", lw=1, zorder=0)
    for v, (x, y) in pos.items():
        ax.text(x, y, perm.pretty(v), ha="center", va="center", fontsize=8,
                bbox=dict(boxstyle="round", fc="white", ec="tab:blue"))
    ax.axis("off")
    if title:
        ax.set_title(title)
    return save(fig, path)


def draw_counts(pairs: list[tuple[int, int]], path: str,
                xlabel: str, ylabel: str, title: str | None = None,
                log: bool = True) -> str:
    xs = [p[0] for p in pairs]
    ys = [p[1] for p in pairs]
    fig, ax = plt.subplots(figsize=(5, 3.2))
    ax.plot(xs, ys, marker="o", color="tab:blue")
    if log and all(y > 0 for y in ys):
        ax.set_yscale("log")
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.grid(True, alpha=0.3)
    if title:
        ax.set_title(title)
    return save(fig, path)


def draw_puzzle(pz, path: str, title: str | None = None) -> str:
    """Render a filled puzzle; 0 edges gray, 1 edges black, 10 edges red."""
    import math
    n = pz.n
    h = math.sqrt(3) / 2
    color = {0: "0.7", 1: "black", 2: "tab:red"}

    def corner(r, c):
        # apex of up(r, c): row r has triangles starting at x offset
        return ((c - 1) - (r - 1) / 2, -(r - 1) * h)

    fig, ax = plt.subplots(figsize=(0.9 * n + 1, 0.9 * n + 1))
    for r in range(1, n + 1):
        for c in range(1, r + 1):
            _draw_triangle(ax, corner(r, c), h, pz.up[r - 1][c - 1],
                           color, down=False)
        for c in range(1, r):
            apex_x, apex_y = corner(r, c)
            _draw_triangle(ax, (apex_x + 0.5, apex_y - h), h,
                           pz.down[r - 1][c - 1], color, down=True)
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title)
    return save(fig, path)


def _draw_triangle(ax, apex, h, labels, color, down: bool) -> None:
    x, y = apex
    if not down:
        # apex at top; south, northeast, northwest edges
        a, b, c = (x, y), (x - 0.5, y - h), (x + 0.5, y - h)
        edges = [((x - 0.5, y - h), (x + 0.5, y - h), labels[0]),
                 ((x + 0.5, y - h), (x, y), labels[1]),
                 ((x, y), (x - 0.5, y - h), labels[2])]
    else:
        # apex at bottom; north, southwest, southeast edges
        a, b, c = (x, y), (x - 0.5, y + h), (x + 0.5, y + h)
        edges = [((x - 0.5, y + h), (x + 0.5, y + h), labels[0]),
                 ((x - 0.5, y + h), (x, y), labels[1]),
                 ((x, y), (x + 0.5, y + h), labels[2])]
    ax.add_patch(Polygon([a, b, c], closed=True, fill=False, lw=0.2,
                         edgecolor="0.9"))
    for (p1, p2, lab) in edges:
        ax.plot([p1[0], p2[0]], [p1[1], p2[1]], color=color[lab], lw=2)
