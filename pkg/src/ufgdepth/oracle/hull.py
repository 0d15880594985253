"""
Closed convex-hull membership by Caratheodory's theorem on homogeneous integer points.

A point (x, y) is stored as (X, Y, W) with W > 0 and x = X/W, y = Y/W, so
every predicate is a sign of an integer expression.
"""

from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Sequence, Tuple

Homogeneous = Tuple[int, int, int]


def homogeneous(x: Fraction, y: Fraction) -> Homogeneous:
    x, y = Fraction(x), Fraction(y)
    w = lcm(x.denominator, y.denominator)
    return (int(x * w), int(y * w), w)


def orient(a: Homogeneous, b: Homogeneous, c: Homogeneous) -> int:
    det = (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
    )
    return (det > 0) - (det < 0)


def same(a: Homogeneous, b: Homogeneous) -> bool:
    return a[0] * b[2] == b[0] * a[2] and a[1] * b[2] == b[1] * a[2]


def _between(p: Homogeneous, a: Homogeneous, b: Homogeneous, axis: int) -> bool:
    pa = p[axis] * a[2] - a[axis] * p[2]
    pb = p[axis] * b[2] - b[axis] * p[2]
    return pa * pb <= 0


def on_segment(p: Homogeneous, a: Homogeneous, b: Homogeneous) -> bool:
    return orient(a, b, p) == 0 and _between(p, a, b, 0) and _between(p, a, b, 1)


def in_triangle(p: Homogeneous, a: Homogeneous, b: Homogeneous, c: Homogeneous) -> bool:
    o = orient(a, b, c)
    if o == 0:
        return on_segment(p, a, b) or on_segment(p, b, c) or on_segment(p, a, c)
    return o * orient(a, b, p) >= 0 and o * orient(b, c, p) >= 0 and o * orient(c, a, p) >= 0


def in_hull(p: Homogeneous, points: Sequence[Homogeneous]) -> bool:
    """p is a point of the set, on a segment of two, or in a triangle of three."""
    if any(same(p, q) for q in points):
        return True
    if any(on_segment(p, a, b) for a, b in combinations(points, 2)):
        return True
    return any(in_triangle(p, a, b, c) for a, b, c in combinations(points, 3))
