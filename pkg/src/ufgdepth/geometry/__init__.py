"""Exact rational plane geometry."""

from .clipping import HalfPlane, area2, half_planes, intersect
from .cover import SMALL_COVER, area_cover, covers_hull, interval_cover
from .hull import EMPTY, ConvexPoly, convex_hull
from .primitives import Point2, as_fraction, cross, orientation

__all__ = [
    "EMPTY",
    "ConvexPoly",
    "HalfPlane",
    "Point2",
    "SMALL_COVER",
    "area2",
    "area_cover",
    "as_fraction",
    "convex_hull",
    "covers_hull",
    "cross",
    "half_planes",
    "intersect",
    "interval_cover",
    "orientation",
]
