"""Matplotlib figures for puzzles, partial puzzles and Mondrian boards.

SVG output is reproducible: a fixed ``svg.hashsalt`` and no date metadata,
so identical inputs give byte-identical files.
"""

from __future__ import annotations

import io
import math
import os

import matplotlib

matplotlib.use("Agg")

from matplotlib.figure import Figure  # noqa: E402
from matplotlib.patches import Polygon, Rectangle  # noqa: E402

__all__ = ["filling_figure", "filling_svg", "partial_figure", "partial_svg", "mondrian_figure",
           "mondrian_svg", "mondrian_tree_svgs", "figure_to_svg", "save_figure"]

RC = {
    "svg.hashsalt": "lrpuzzles",
    "svg.fonttype": "none",
    "font.family": "DejaVu Sans",
    "font.size": 8,
}

# piece name -> face colour; anything unlisted falls back to grey
PALETTE = {
    "0/0/0": "#f4f4f4",
    "1/1/1": "#9ecae1",
    "2/2/2": "#fdd0a2",
    "3/3/3": "#c7e9c0",
    "eq": "#fde0ef",
    "K": "#fcbba1",
    "KT1": "#fc9272",
    "KT2": "#fb6a4a",
}
FALLBACK = "#dadada"
H = math.sqrt(3) / 2


def _pt(r, j):
    """Lattice point j on row line r (apex is r = 0)."""
    return (j - r / 2, -r * H)


def _cell_vertices(kind, r, c):
    if kind == "U":
        return [_pt(r - 1, c - 1), _pt(r, c), _pt(r, c - 1)]
    return [_pt(r - 1, c - 1), _pt(r - 1, c), _pt(r, c)]


def _edges(kind, r, c):
    """Edge endpoints in the tile's clockwise label order."""
    if kind == "U":
        top, bl, br = _pt(r - 1, c - 1), _pt(r, c - 1), _pt(r, c)
        return [(bl, top), (top, br), (br, bl)]
    tl, tr, bot = _pt(r - 1, c - 1), _pt(r - 1, c), _pt(r, c)
    return [(tl, tr), (tr, bot), (bot, tl)]


def _colour(tile):
    if getattr(tile, "eq", False) or tile.piece.startswith("eq"):
        return PALETTE["eq"]
    return PALETTE.get(tile.piece, FALLBACK)


def _label_pos(edge, centre, pull=0.22):
    (x0, y0), (x1, y1) = edge
    mx, my = (x0 + x1) / 2, (y0 + y1) / 2
    return mx + pull * (centre[0] - mx), my + pull * (centre[1] - my)


def _new_axes(n, title=None):
    size = 1.1 + 0.9 * n
    fig = Figure(figsize=(size, size * 0.95))
    ax = fig.add_axes((0.02, 0.02, 0.96, 0.9 if title else 0.96))
    ax.set_aspect("equal")
    ax.set_axis_off()
    ax.set_xlim(-n / 2 - 0.3, n / 2 + 0.3)
    ax.set_ylim(-n * H - 0.3, 0.3)
    if title:
        ax.set_title(title, fontsize=8)
    return fig, ax


def _draw_tile(ax, kind, r, c, tile, fontsize):
    verts = _cell_vertices(kind, r, c)
    ax.add_patch(Polygon(verts, closed=True, facecolor=_colour(tile), edgecolor="#333333", linewidth=0.6))
    centre = (sum(v[0] for v in verts) / 3, sum(v[1] for v in verts) / 3)
    for edge, lab in zip(_edges(kind, r, c), tile.labels):
        if lab[:1].isdigit() or lab.startswith("("):
            x, y = _label_pos(edge, centre)
            ax.text(x, y, lab, ha="center", va="center", fontsize=fontsize)
    if getattr(tile, "predicate", None):
        ax.text(centre[0], centre[1], "•", ha="center", va="center", fontsize=fontsize)


def filling_figure(f):
    from .rings import format_coeff
    title = f"{f.alpha} * {f.beta} -> {f.gamma}   [{format_coeff(f.coefficient)}]"
    fig, ax = _new_axes(f.n, title)
    fs = max(4, 9 - f.n // 2)
    for r in range(1, f.n + 1):
        for c in range(1, r + 1):
            _draw_tile(ax, "U", r, c, f.up(r, c), fs)
            if c < r:
                _draw_tile(ax, "D", r, c, f.down(r, c), fs)
    return fig


def partial_figure(p):
    """Filled cells of a partial puzzle, with the remaining region outlined."""
    n = p.n
    fig, ax = _new_axes(n, f"stage {p.stage}")
    ax.add_patch(Polygon([_pt(0, 0), _pt(n, n), _pt(n, 0)], closed=True, fill=False,
                         edgecolor="#999999", linewidth=0.6, linestyle="--"))
    fs = max(4, 9 - n // 2)
    for (kind, r, c), tile in p.cells:
        _draw_tile(ax, kind, r, c, tile, fs)
    lead = next((e for e in p.frontier if e.kind == "lead"), None)
    if lead is not None and lead.cell is not None:
        kind, r, c = lead.cell
        (x0, y0), (x1, y1) = _edges(kind, r, c)[1]
        ax.plot([x0, x1], [y0, y1], color="#d62728", linewidth=1.8)
    return fig


def mondrian_figure(t, size=None):
    """The board of a Mondrian tableau: squares drawn on their anti-diagonal cells."""
    m = t.m
    size = size or 1.0 + 0.35 * m
    fig = Figure(figsize=(size, size))
    ax = fig.add_axes((0.02, 0.02, 0.96, 0.96))
    ax.set_aspect("equal")
    ax.set_axis_off()
    ax.set_xlim(-0.2, m + 0.2)
    ax.set_ylim(-0.2, m + 0.2)
    for x in range(m):
        ax.add_patch(Rectangle((x, x), 1, 1, facecolor="#eeeeee", edgecolor="none"))
    styles = {"O": ("#000000", 1.6), "A": ("#1f77b4", 1.2), "B": ("#d62728", 1.2), "D": ("#2ca02c", 1.2)}
    for name, sq in t.squares():
        colour, lw = styles[name[0]]
        ax.add_patch(Rectangle((sq.lo - 1, sq.lo - 1), sq.side, sq.side, fill=False, edgecolor=colour,
                               linewidth=lw))
    return fig


def figure_to_svg(fig):
    buf = io.StringIO()
    with matplotlib.rc_context(RC):
        fig.savefig(buf, format="svg", metadata={"Date": None})
    return buf.getvalue()


def filling_svg(f):
    with matplotlib.rc_context(RC):
        return figure_to_svg(filling_figure(f))


def partial_svg(p):
    with matplotlib.rc_context(RC):
        return figure_to_svg(partial_figure(p))


def mondrian_svg(t):
    with matplotlib.rc_context(RC):
        return figure_to_svg(mondrian_figure(t))


def mondrian_tree_svgs(lam, mu, k, n, directory):
    """One board per node of the game, named <lambda>_<mu>_<node>.svg."""
    from .core import format_partition
    from .mondrian import play_tree
    stem = f"{format_partition(lam)}_{format_partition(mu)}".replace(",", "-")
    return [save_figure(mondrian_svg(t), directory, f"{stem}_{idx}.svg")
            for idx, (_, t) in enumerate(play_tree(lam, mu, k, n), start=1)]


def save_figure(svg_text, directory, name):
    os.makedirs(directory, exist_ok=True)
    path = os.path.join(directory, name)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(svg_text)
    return path
