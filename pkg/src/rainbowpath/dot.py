"""Graphviz DOT export with one palette color per edge color."""

from __future__ import annotations

from typing import Sequence

from rainbowpath.graph import EdgeColoredGraph, is_rainbow_path

PALETTE = (
    "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#42d4f4",
    "#f032e6", "#bfef45", "#469990", "#9a6324", "#800000", "#000075",
)

BASE_PENWIDTH = 1


def export_dot(G: EdgeColoredGraph, path: Sequence[int] | None = None, name: str = "G") -> str:
    """Undirected DOT text; edges of ``path`` (if given) drawn twice as thick.

    Palette slots follow the dense color index, so the same graph always gets
    the same colors; the numeric color is kept as the edge label.
    """
    highlight: set[tuple[int, int]] = set()
    if path is not None:
        check = is_rainbow_path(G, path)
        if not check:
            raise ValueError(f"highlighted path is not a rainbow path: {check.reason}")
        highlight = {(min(a, b), max(a, b)) for a, b in zip(path, path[1:])}
    index = G.color_index
    lines = [f"graph {name} {{"]
    for v in G.vertices():
        lines.append(f"  {v};")
    for u, v, c in G.edges:
        width = 2 * BASE_PENWIDTH if (u, v) in highlight else BASE_PENWIDTH
        color = PALETTE[index[c] % len(PALETTE)]
        lines.append(f'  {u} -- {v} [color="{color}", label="{c}", penwidth={width}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
