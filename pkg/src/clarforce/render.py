"""SVG drawing of a maximum Clar cover.

Cover faces are shaded, cover edges drawn bold, fixed bonds dashed. Output
bytes depend only on the graph and the cover.
"""

from __future__ import annotations

from .clar import ClarCover
from .decomp import Decomposition
from .planegraph import Color, Kind, PlaneBipartiteGraph

SCALE = 40
# hexagonal doubled coordinates step sqrt(3)/2 horizontally and 1/2 vertically
HEX_SCALE = (35, 20)
MARGIN = 20


def _projector(g: PlaneBipartiteGraph):
    sx, sy = HEX_SCALE if g.kind is Kind.HEXAGONAL else (SCALE, SCALE)
    xs = [p[0] for p in g.positions] or [0]
    ys = [p[1] for p in g.positions] or [0]
    x0, y0 = min(xs), min(ys)
    width = (max(xs) - x0) * sx + 2 * MARGIN
    height = (max(ys) - y0) * sy + 2 * MARGIN

    def project(v: int) -> tuple[int, int]:
        x, y = g.positions[v]
        return (x - x0) * sx + MARGIN, (y - y0) * sy + MARGIN

    return project, width, height


def render_svg(g: PlaneBipartiteGraph, cover: ClarCover, decomposition: Decomposition | None = None) -> str:
    project, width, height = _projector(g)
    fixed = set(decomposition.fixed_bonds) if decomposition else set()
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    for f, boundary in enumerate(g.faces):
        points = " ".join(f"{x},{y}" for x, y in map(project, boundary))
        fill = "#f2c14e" if f in cover.faces else "#f4f4f4"
        out.append(f'<polygon class="face{" cover" if f in cover.faces else ""}" data-face="{f}" '
                   f'points="{points}" fill="{fill}" stroke="none"/>')
    for e, (u, v) in enumerate(g.edges):
        (x1, y1), (x2, y2) = project(u), project(v)
        classes = ["edge"]
        attrs = 'stroke="#333333" stroke-width="2"'
        if e in cover.edges:
            classes.append("cover")
            attrs = 'stroke="#111111" stroke-width="6"'
        if e in fixed:
            classes.append("fixed")
            attrs += ' stroke-dasharray="6,4"'
        out.append(f'<line class="{" ".join(classes)}" data-edge="{e}" '
                   f'x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" {attrs}/>')
    for v in range(g.n_vertices):
        x, y = project(v)
        color = "#c0392b" if g.colors[v] is Color.RED else "#2e6fbf"
        out.append(f'<circle data-vertex="{v}" cx="{x}" cy="{y}" r="4" fill="{color}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
