"""
Simplicial depth in the plane by direct enumeration of pairs and triples.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Any, Optional, Sequence

from .config import OracleConfig
from .hull import homogeneous, in_triangle, on_segment, orient, same


@dataclass(frozen=True)
class SimplicialDepth:
    """
    Containment fractions of a query.

    p2 and p3 run over all index pairs and triples. The conditioned values
    only count pairs of distinct points and non-collinear triples, which are
    exactly the spatial premises of size two and three.
    """

    p2: Fraction
    p3: Fraction
    p2_conditioned: Fraction
    p3_conditioned: Fraction

    @property
    def conditioned_sum(self) -> Fraction:
        return self.p2_conditioned + self.p3_conditioned


def _ratio(hits: int, total: int) -> Fraction:
    return Fraction(hits, total) if total else Fraction(0)


def simplicial_depth_2d(points: Sequence[Any], query: Any, cfg: Optional[OracleConfig] = None) -> SimplicialDepth:
    """
    Args:
        points: Sample points (unit weights), Point2-like with x and y
        query: Point2-like query
        cfg: Unused; accepted for a uniform oracle signature
    """
    pts = [homogeneous(p.x, p.y) for p in points]
    q = homogeneous(query.x, query.y)

    pairs = hits2 = distinct_pairs = distinct_hits2 = 0
    for a, b in combinations(pts, 2):
        inside = on_segment(q, a, b)
        pairs += 1
        hits2 += inside
        if not same(a, b):
            distinct_pairs += 1
            distinct_hits2 += inside

    triples = hits3 = proper = proper_hits3 = 0
    for a, b, c in combinations(pts, 3):
        inside = in_triangle(q, a, b, c)
        triples += 1
        hits3 += inside
        if orient(a, b, c) != 0:
            proper += 1
            proper_hits3 += inside

    return SimplicialDepth(
        _ratio(hits2, pairs),
        _ratio(hits3, triples),
        _ratio(distinct_hits2, distinct_pairs),
        _ratio(proper_hits3, proper),
    )
