"""
Convex polygons with degenerate forms and the monotone chain hull.
"""

from dataclasses import dataclass
from typing import Iterable, Tuple

from .primitives import Point2, cross, orientation


@dataclass(frozen=True)
class ConvexPoly:
    """
    Closed convex polygon given by its vertices in counterclockwise order.

    Degenerate forms: two vertices is a segment, one vertex a point, none
    the empty set. No three consecutive vertices are collinear.
    """

    vertices: Tuple[Point2, ...]

    @property
    def dim(self) -> int:
        """Affine dimension; -1 for the empty set."""
        return min(len(self.vertices), 3) - 1

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    def contains(self, p: Point2) -> bool:
        """Closed membership: boundary points are inside."""
        vs = self.vertices
        if not vs:
            return False
        if len(vs) == 1:
            return vs[0] == p
        if len(vs) == 2:
            a, b = vs
            return (
                orientation(a, b, p) == 0
                and min(a.x, b.x) <= p.x <= max(a.x, b.x)
                and min(a.y, b.y) <= p.y <= max(a.y, b.y)
            )
        return all(orientation(vs[i - 1], vs[i], p) >= 0 for i in range(len(vs)))

    def __str__(self) -> str:
        return "[" + " ".join(str(v) for v in self.vertices) + "]"


EMPTY = ConvexPoly(())


def convex_hull(points: Iterable[Point2]) -> ConvexPoly:
    """
    Exact convex hull (Andrew's monotone chain).

    Repeated points are ignored, collinear inputs collapse to the segment
    between their extremes and a single point stays a point.
    """
    pts = sorted(set(points))
    if len(pts) <= 1:
        return ConvexPoly(tuple(pts))

    lower = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)

    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)

    return ConvexPoly(tuple(lower[:-1] + upper[:-1]))
