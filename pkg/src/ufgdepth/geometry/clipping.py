"""
Convex x convex intersection by half-plane clipping, and polygon areas.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List

from .hull import EMPTY, ConvexPoly, convex_hull
from .primitives import Point2


@dataclass(frozen=True)
class HalfPlane:
    """Closed half-plane a*x + b*y >= c."""

    a: Fraction
    b: Fraction
    c: Fraction

    def slack(self, p: Point2) -> Fraction:
        return self.a * p.x + self.b * p.y - self.c


def half_planes(poly: ConvexPoly) -> List[HalfPlane]:
    """Half-planes whose intersection is exactly the polygon (including degenerate forms)."""
    vs = poly.vertices
    if len(vs) == 1:
        p = vs[0]
        return [
            HalfPlane(Fraction(1), Fraction(0), p.x),
            HalfPlane(Fraction(-1), Fraction(0), -p.x),
            HalfPlane(Fraction(0), Fraction(1), p.y),
            HalfPlane(Fraction(0), Fraction(-1), -p.y),
        ]
    if len(vs) == 2:
        u, v = vs
        a, b = u.y - v.y, v.x - u.x
        c = a * u.x + b * u.y
        dx, dy = v.x - u.x, v.y - u.y
        return [
            HalfPlane(a, b, c),
            HalfPlane(-a, -b, -c),
            HalfPlane(dx, dy, dx * u.x + dy * u.y),
            HalfPlane(-dx, -dy, -(dx * v.x + dy * v.y)),
        ]
    planes = []
    for i in range(len(vs)):
        u, v = vs[i - 1], vs[i]
        a, b = u.y - v.y, v.x - u.x
        planes.append(HalfPlane(a, b, a * u.x + b * u.y))
    return planes


def _clip(points: List[Point2], plane: HalfPlane) -> List[Point2]:
    # Sutherland-Hodgman against one closed half-plane
    out = []
    for i, cur in enumerate(points):
        prev = points[i - 1]
        s_cur, s_prev = plane.slack(cur), plane.slack(prev)
        if s_cur >= 0:
            if s_prev < 0:
                out.append(_crossing(prev, cur, s_prev, s_cur))
            out.append(cur)
        elif s_prev >= 0:
            out.append(_crossing(prev, cur, s_prev, s_cur))
    return out


def _crossing(p: Point2, q: Point2, sp: Fraction, sq: Fraction) -> Point2:
    t = sp / (sp - sq)
    return Point2(p.x + t * (q.x - p.x), p.y + t * (q.y - p.y))


def intersect(a: ConvexPoly, b: ConvexPoly) -> ConvexPoly:
    """
    Exact intersection of two closed convex polygons.

    Args:
        a: Subject polygon (any degenerate form)
        b: Clip polygon (any degenerate form)

    Returns:
        The intersection, possibly a segment, a point or EMPTY
    """
    if a.is_empty or b.is_empty:
        return EMPTY
    points = list(a.vertices)
    for plane in half_planes(b):
        points = _clip(points, plane)
        if not points:
            return EMPTY
        points = list(convex_hull(points).vertices)
    return convex_hull(points)


def area2(poly: ConvexPoly) -> Fraction:
    """Twice the area (shoelace); zero for degenerate forms."""
    vs = poly.vertices
    if len(vs) < 3:
        return Fraction(0)
    total = Fraction(0)
    for i in range(len(vs)):
        p, q = vs[i - 1], vs[i]
        total += p.x * q.y - q.x * p.y
    return total
