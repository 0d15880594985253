"""
Decides whether the hulls of omit-one subsets cover the hull of a point set.
"""

from fractions import Fraction
from itertools import combinations
from typing import Collection, Dict, Iterable, Sequence, Set, Tuple

from ..errors import InputError
from .clipping import area2, intersect
from .hull import ConvexPoly, convex_hull
from .primitives import Point2, orientation

Interval = Tuple[Fraction, Fraction]

# largest point set decided from orientation signs alone
SMALL_COVER = 4


def interval_cover(target: Interval, intervals: Iterable[Interval]) -> bool:
    """True iff the union of the closed intervals contains the closed target interval."""
    lo, hi = target
    pieces = sorted((max(a, lo), min(b, hi)) for a, b in intervals if a <= hi and b >= lo)
    if not pieces or pieces[0][0] > lo:
        return False
    reach = pieces[0][1]
    for a, b in pieces[1:]:
        if a > reach:
            return False
        reach = max(reach, b)
    return reach >= hi


def covers_hull(points: Collection[Point2], removed: Collection[Point2]) -> bool:
    """
    Whether the union over g in removed of conv(points - {g}) equals conv(points).

    Stratified by the dimension of conv(points): a point is never covered,
    a segment is checked as a 1-D interval cover on a coordinate projection
    and beyond dim + 1 removed points Caratheodory's theorem covers the
    hull. Proper polygons of at most SMALL_COVER points are decided from
    their hull vertices (see _small_cover), larger ones by area_cover.

    Raises:
        InputError: If removed is empty or not a subset of points
    """
    pts = set(points)
    ts = set(removed)
    if not ts:
        raise InputError("covers_hull needs at least one removed point")
    if not ts <= pts:
        raise InputError("Removed points must be a subset of the point set")

    hull = convex_hull(pts)
    if hull.dim <= 0:
        return False
    if len(ts) > hull.dim + 1:
        return True

    if hull.dim == 1:
        use_x = len({p.x for p in pts}) > 1

        def proj(p: Point2) -> Fraction:
            return p.x if use_x else p.y

        values = [proj(p) for p in pts]
        pieces = []
        for g in ts:
            rest = [proj(p) for p in pts if p != g]
            if rest:
                pieces.append((min(rest), max(rest)))
        return interval_cover((min(values), max(values)), pieces)

    if len(pts) <= SMALL_COVER:
        return _small_cover(hull, pts, ts)
    return _area_cover(hull, pts, ts)


def _small_cover(hull: ConvexPoly, pts: Set[Point2], ts: Set[Point2]) -> bool:
    """
    Cover test on a proper polygon from orientation signs.

    One removed point is covered iff it is not a hull vertex. Two removed
    points leave a gap iff they are neighbouring vertices with no other
    point on the edge between them; a diagonal has a vertex w on its far
    side and every triangle abq splits along qw into aqw and bqw. Three
    removed points a, b, c are covered iff a fourth point d exists, since
    abc lies in the union of dab, dbc and dca.
    """
    vertices = hull.vertices
    if len(ts) == 1:
        return next(iter(ts)) not in vertices
    if len(ts) == 3:
        return len(pts) > 3
    a, b = ts
    if a not in vertices or b not in vertices:
        return True
    gap = (vertices.index(a) - vertices.index(b)) % len(vertices)
    if gap not in (1, len(vertices) - 1):
        return True
    return any(orientation(a, b, p) == 0 for p in pts - ts)


def area_cover(points: Collection[Point2], removed: Collection[Point2]) -> bool:
    """
    Cover test by exact areas, for a proper polygon.

    Finitely many closed pieces covering the polygon up to measure zero
    cover it exactly, so the union of the full-dimensional omit-one hulls
    covers conv(points) iff its area (inclusion-exclusion over exact
    intersections) equals the hull's.

    Raises:
        InputError: If conv(points) is not two-dimensional
    """
    pts, ts = set(points), set(removed)
    hull = convex_hull(pts)
    if hull.dim != 2:
        raise InputError("area_cover needs a two-dimensional hull", {"dim": hull.dim})
    return _area_cover(hull, pts, ts)


def _area_cover(hull: ConvexPoly, pts: Set[Point2], ts: Set[Point2]) -> bool:
    pieces = []
    for g in sorted(ts):
        piece = convex_hull(p for p in pts if p != g)
        if piece.dim == 2:
            pieces.append(piece)
    if not pieces:
        return False
    return _union_area2(pieces) == area2(hull)


def _union_area2(pieces: Sequence[ConvexPoly]) -> Fraction:
    # each group extends its prefix, whose intersection the previous round stored
    common: Dict[Tuple[int, ...], ConvexPoly] = {}
    total = Fraction(0)
    for k in range(1, len(pieces) + 1):
        sign = 1 if k % 2 else -1
        for group in combinations(range(len(pieces)), k):
            if k == 1:
                shape = pieces[group[0]]
            else:
                prefix = common.get(group[:-1])
                if prefix is None:
                    continue
                shape = intersect(prefix, pieces[group[-1]])
            if shape.dim < 2:
                continue
            common[group] = shape
            total += sign * area2(shape)
    return total
