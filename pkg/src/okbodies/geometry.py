"""Exact polygon machinery: convex hulls, shoelace areas, containment.

Points are pairs of ExactScalar.  Hull vertices are kept counterclockwise,
rotated so the polygon starts at the origin (every body here contains it).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegeneratePolygon
from .scalars import ExactScalar, coerce

__all__ = ["Shape", "Body", "Point", "cross", "convex_hull", "shoelace_area", "make_body"]

Point = tuple[ExactScalar, ExactScalar]

_ZERO = ExactScalar(Fraction(0))


class Shape(enum.Enum):
    TRIANGLE = "triangle"
    QUADRILATERAL = "quadrilateral"


def as_point(p) -> Point:
    return (coerce(p[0]), coerce(p[1]))


def cross(o: Point, a: Point, b: Point) -> ExactScalar:
    """Signed cross product of (a - o) and (b - o)."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points) -> tuple[Point, ...]:
    """Extreme points in counterclockwise order (collinear points dropped)."""
    pts = sorted(set(as_point(p) for p in points))
    if len(pts) <= 2:
        return tuple(pts)

    def half(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and cross(out[-2], out[-1], p).sign() <= 0:
                out.pop()
            out.append(p)
        return out

    lower = half(pts)
    upper = half(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    return tuple(hull)


def shoelace_area(vertices) -> ExactScalar:
    """Exact Euclidean area of a simple polygon."""
    pts = [as_point(p) for p in vertices]
    if len(pts) < 3:
        raise DegeneratePolygon(f"{len(pts)} vertices")
    total = _ZERO
    for p, q in zip(pts, pts[1:] + pts[:1]):
        total = total + (p[0] * q[1] - q[0] * p[1])
    if total.sign() < 0:
        total = -total
    half = total * Fraction(1, 2)
    if half.sign() == 0:
        raise DegeneratePolygon("zero area")
    return half


@dataclass(frozen=True)
class Body:
    """A Newton-Okounkov polygon: exact vertices, shape tag, muhat."""

    vertices: tuple[Point, ...]  # counterclockwise, starting at (0, 0)
    shape: Shape
    minimal: bool
    muhat: ExactScalar

    @property
    def area(self) -> ExactScalar:
        return shoelace_area(self.vertices)

    def contains(self, p) -> bool:
        p = as_point(p)
        verts = self.vertices
        return all(
            cross(a, b, p).sign() >= 0 for a, b in zip(verts, verts[1:] + verts[:1])
        )


def make_body(points, muhat: ExactScalar, minimal: bool, expect_shape: Shape | None = None) -> Body:
    """Hull the given points into a Body anchored at the origin."""
    hull = convex_hull(points)
    if len(hull) < 3:
        raise DegeneratePolygon("body degenerates to a segment")
    if len(hull) > 4:
        raise DegeneratePolygon(f"{len(hull)} hull vertices")
    origin = (_ZERO, _ZERO)
    if origin not in hull:
        raise DegeneratePolygon("body does not touch the origin")
    k = hull.index(origin)
    hull = hull[k:] + hull[:k]
    shape = Shape.TRIANGLE if len(hull) == 3 else Shape.QUADRILATERAL
    if expect_shape is not None and shape != expect_shape:
        raise DegeneratePolygon(f"expected {expect_shape.value}, hulled to {shape.value}")
    return Body(hull, shape, minimal, muhat)
