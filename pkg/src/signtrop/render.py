"""Deterministic SVG and ASCII pictures of Newton polygons.

Layout: one dot per finite coefficient ``(i, v(c_i))``, the bounded lower hull
drawn through its vertices, a sign label beside each dot (``TR`` input only)
and integer ticks on both axes.
"""

from __future__ import annotations

import math

from .hyperfield import INF, TR
from .hyperpoly import HPoly
from .newton import NewtonPolygon, newton_polygon

UNIT = 60
MARGIN = 40


def _signs(p: HPoly) -> dict[int, str]:
    if p.field is not TR:
        return {}
    return {i: "+" if c.sign > 0 else "-" for i, c in enumerate(p.coeffs) if c is not INF}


def _fmt(x: float) -> str:
    return f"{x:.2f}".rstrip("0").rstrip(".")


def render_svg(p: HPoly, poly: NewtonPolygon | None = None) -> str:
    poly = poly or newton_polygon(p)
    signs = _signs(p)
    xs = [i for i, _ in poly.points]
    ys = [v for _, v in poly.points]
    x_lo, x_hi = 0, max(xs)
    y_lo, y_hi = min(0, math.floor(min(ys))), max(1, math.ceil(max(ys)))
    width = (x_hi - x_lo) * UNIT + 2 * MARGIN
    height = (y_hi - y_lo) * UNIT + 2 * MARGIN

    def sx(x) -> float:
        return MARGIN + float(x - x_lo) * UNIT

    def sy(y) -> float:
        return MARGIN + float(y_hi - y) * UNIT

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<g stroke="#999" stroke-width="1">',
        f'<line x1="{_fmt(sx(x_lo))}" y1="{_fmt(sy(0))}" x2="{_fmt(sx(x_hi))}" y2="{_fmt(sy(0))}"/>',
        f'<line x1="{_fmt(sx(0))}" y1="{_fmt(sy(y_lo))}" x2="{_fmt(sx(0))}" y2="{_fmt(sy(y_hi))}"/>',
        "</g>",
        '<g font-family="sans-serif" font-size="11" fill="#666" text-anchor="middle">',
    ]
    for x in range(x_lo, x_hi + 1):
        out.append(f'<text x="{_fmt(sx(x))}" y="{_fmt(sy(0) + 16)}">{x}</text>')
    for y in range(y_lo, y_hi + 1):
        if y:
            out.append(f'<text x="{_fmt(sx(0) - 14)}" y="{_fmt(sy(y) + 4)}">{y}</text>')
    out.append("</g>")
    if len(poly.vertices) > 1:
        pts = " ".join(f"{_fmt(sx(x))},{_fmt(sy(y))}" for x, y in poly.vertices)
        out.append(f'<polyline points="{pts}" fill="none" stroke="black" stroke-width="2"/>')
    out.append('<g fill="black">')
    for x, y in poly.points:
        out.append(f'<circle cx="{_fmt(sx(x))}" cy="{_fmt(sy(y))}" r="4"/>')
    out.append("</g>")
    if signs:
        out.append('<g font-family="sans-serif" font-size="14" fill="black">')
        for x, y in poly.points:
            label = "+" if signs[x] == "+" else "−"
            out.append(f'<text x="{_fmt(sx(x) + 7)}" y="{_fmt(sy(y) - 7)}">{label}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_ascii(p: HPoly, poly: NewtonPolygon | None = None) -> str:
    """Text plot: rows are the distinct point heights, highest first.

    Hull vertices are bracketed. Each point shows its sign, or ``o`` over ``T``.
    """
    poly = poly or newton_polygon(p)
    signs = _signs(p)
    verts = set(poly.vertices)
    width = max(i for i, _ in poly.points) + 1
    heights = sorted({v for _, v in poly.points}, reverse=True)
    label_w = max(len(str(h)) for h in heights)
    rows = []
    for h in heights:
        cells = []
        for i in range(width):
            if (i, h) in poly.points:
                mark = signs.get(i, "o")
                cells.append(f"[{mark}]" if (i, h) in verts else f" {mark} ")
            else:
                cells.append("   ")
        rows.append(f"{str(h):>{label_w}} |" + "".join(cells).rstrip())
    rows.append(" " * label_w + " +" + "-" * (3 * width))
    rows.append(" " * label_w + "  " + "".join(f"{i:^3}" for i in range(width)).rstrip())
    for e in poly.edges:
        rows.append(f"edge slope={e.slope} hlen={e.hlen} support={{{', '.join(map(str, e.support))}}}")
    return "\n".join(rows) + "\n"


__all__ = ["render_svg", "render_ascii"]
