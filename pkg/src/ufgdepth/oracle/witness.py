"""
Monte-Carlo search for a point of conv(P) outside every conv(P - {g}), g in T.
"""

import logging
from fractions import Fraction
from typing import Any, Optional, Sequence

import numpy as np

from ..errors import InputError
from ..geometry import Point2
from .config import OracleConfig
from .hull import homogeneous, in_hull

logger = logging.getLogger(__name__)

WEIGHT_RANGE = 1000


def cover_witness_mc(points: Sequence[Any], removed: Sequence[Any], cfg: Optional[OracleConfig] = None) -> Optional[Point2]:
    """
    Sample random rational convex combinations of the points.

    Half of the draws weight every point, the other half only a random
    subset of one to three points, so neighbourhoods of edges and vertices
    are visited too.

    Returns:
        The first sampled point escaping every omit-one hull, or None
    """
    cfg = cfg or OracleConfig()
    pts = sorted(set(points))
    if len(pts) > 6:
        raise InputError("cover_witness_mc supports at most six points", {"points": len(pts)})
    rest = [[homogeneous(p.x, p.y) for p in pts if p != g] for g in set(removed)]
    rng = np.random.default_rng(cfg.seed)

    for draw in range(cfg.mc_samples):
        weights = rng.integers(0, WEIGHT_RANGE, size=len(pts))
        if draw % 2:
            keep = rng.choice(len(pts), size=int(rng.integers(1, min(3, len(pts)) + 1)), replace=False)
            mask = np.zeros(len(pts), dtype=bool)
            mask[keep] = True
            weights = np.where(mask, weights + 1, 0)
        total = int(weights.sum())
        if total == 0:
            continue
        x = sum((Fraction(int(w)) * p.x for w, p in zip(weights, pts)), Fraction(0)) / total
        y = sum((Fraction(int(w)) * p.y for w, p in zip(weights, pts)), Fraction(0)) / total
        h = homogeneous(x, y)
        if not any(in_hull(h, hull) for hull in rest if hull):
            logger.debug("Cover witness found", extra={"draw": draw})
            return Point2(x, y)
    return None
