"""DOT and SVG emitters.

DOT output is deterministic (vertices and edges sorted); SVG is the one
lossy surface of the package: coordinates are rounded to 1e-6 for rendering
only, with the exact values kept in the vertex annotations.
"""

from __future__ import annotations

from .cluster import DualGraph
from .geometry import Body
from .scalars import ExactScalar

__all__ = ["graph_to_dot", "body_to_svg"]


def graph_to_dot(graph: DualGraph, curve_vertices=()) -> str:
    """Undirected DOT text; an extra vertex C is joined to `curve_vertices`."""
    lines = ["graph dual_graph {", "  node [shape=circle];"]
    for v in range(1, graph.n + 1):
        lines.append(f"  {v};")
    if curve_vertices:
        lines.append('  C [shape=box];')
    for i, j in sorted(graph.edges):
        lines.append(f"  {i} -- {j};")
    for v in sorted(set(curve_vertices)):
        lines.append(f"  C -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _approx(x: ExactScalar) -> float:
    return round(float(x), 6)


def body_to_svg(body: Body, width: int = 480, height: int = 360) -> str:
    """Standalone SVG 1.1 document with the polygon and labelled vertices."""
    xs = [_approx(x) for x, _ in body.vertices]
    ys = [_approx(y) for _, y in body.vertices]
    x0, x1 = min(xs + [0.0]), max(xs)
    y0, y1 = min(ys + [0.0]), max(ys)
    span_x = (x1 - x0) or 1.0
    span_y = (y1 - y0) or 1.0
    pad = 0.06

    def sx(x: float) -> float:
        return round((x - x0) / span_x * width * (1 - 2 * pad) + width * pad, 3)

    def sy(y: float) -> float:
        return round(height - ((y - y0) / span_y * height * (1 - 2 * pad) + height * pad), 3)

    points = " ".join(f"{sx(x)},{sy(y)}" for x, y in zip(xs, ys))
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'  <polygon points="{points}" fill="#9ecae1" fill-opacity="0.6" '
        f'stroke="#08519c" stroke-width="1.5"/>',
    ]
    for (vx, vy), fx, fy in zip(body.vertices, xs, ys):
        label = f"({_fmt(vx)}, {_fmt(vy)})"
        parts.append(f'  <circle cx="{sx(fx)}" cy="{sy(fy)}" r="3" fill="#08519c"/>')
        parts.append(
            f'  <text x="{sx(fx) + 5}" y="{sy(fy) - 5}" font-size="11" '
            f'font-family="monospace">{label}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _fmt(x: ExactScalar) -> str:
    if x.is_rational:
        return f"{x.a.numerator}/{x.a.denominator}"
    return f"{x.a}+{x.b}*sqrt({x.d})"
