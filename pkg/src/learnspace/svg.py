"""Deterministic SVG rendering of grid drawings."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from xml.sax.saxutils import escape

from .drawing import GridDrawing, check_dominance, validate_upright_quad
from .family import LearningGraph, state_key


@dataclass(frozen=True)
class SvgOptions:
    unit: int = 48
    margin: int = 24
    radius: int = 5
    edge_labels: bool = False
    state_labels: bool = False
    check: bool = True  # warn when the drawing fails validation


def render_svg(D: GridDrawing, G: LearningGraph, options: SvgOptions | None = None) -> str:
    """SVG text with the y axis pointing up.

    Geometry goes inside a group flipped by an explicit transform; labels
    are placed outside it so the text stays upright.
    """
    opt = options or SvgOptions()
    if opt.check:
        report = validate_upright_quad(D, G) + check_dominance(D, G)
        if not report.ok:
            warnings.warn("rendering an invalid drawing:\n" + report.format(G.universe))
    coords = D.coords
    u, m = opt.unit, opt.margin
    xs = [c[0] for c in coords.values()] or [0]
    ys = [c[1] for c in coords.values()] or [0]
    x0, y0 = min(xs), min(ys)
    width = (max(xs) - x0) * u + 2 * m
    height = (max(ys) - y0) * u + 2 * m

    def px(x):
        return (x - x0) * u

    def py(y):
        return (y - y0) * u

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<g transform="translate({m} {height - m}) scale(1 -1)" stroke="black" stroke-width="2">',
    ]
    edges = sorted(G.edges, key=lambda e: (state_key(e[0]), state_key(e[1])))
    for a, b, _ in edges:
        (ax, ay), (bx, by) = coords[a], coords[b]
        lines.append(f'<line x1="{px(ax)}" y1="{py(ay)}" x2="{px(bx)}" y2="{py(by)}"/>')
    for v in sorted(G.vertices, key=state_key):
        x, y = coords[v]
        lines.append(f'<circle cx="{px(x)}" cy="{py(y)}" r="{opt.radius}" fill="black" stroke="none"/>')
    lines.append("</g>")
    if opt.edge_labels or opt.state_labels:
        lines.append('<g font-family="sans-serif" font-size="12" fill="#333">')
        if opt.edge_labels:
            for a, b, label in edges:
                (ax, ay), (bx, by) = coords[a], coords[b]
                tx = m + (px(ax) + px(bx)) / 2 + 4
                ty = height - m - (py(ay) + py(by)) / 2 - 4
                name = escape(G.universe.elements[label])
                lines.append(f'<text x="{tx:g}" y="{ty:g}">{name}</text>')
        if opt.state_labels:
            for v in sorted(G.vertices, key=state_key):
                x, y = coords[v]
                tx = m + px(x) + opt.radius + 2
                ty = height - m - py(y) + 14
                name = escape(G.universe.format(v))
                lines.append(f'<text x="{tx:g}" y="{ty:g}" fill="#06c">{name}</text>')
        lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
