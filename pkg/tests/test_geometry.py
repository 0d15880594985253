"""
Tests for exact plane geometry: hulls, clipping and hull covers.
"""
import math
from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ufgdepth.errors import InputError
from ufgdepth.geometry import (
    EMPTY,
    SMALL_COVER,
    Point2,
    area2,
    area_cover,
    as_fraction,
    convex_hull,
    covers_hull,
    half_planes,
    intersect,
    interval_cover,
    orientation,
)
from fixtures.generators import rational_points


def P(x, y):
    return Point2(x, y)


def square(lo, hi):
    return convex_hull([P(lo, lo), P(hi, lo), P(hi, hi), P(lo, hi)])


def test_as_fraction():
    """Test exact parsing of coordinates."""
    test_cases = [
        ("1.5", Fraction(3, 2)),
        (" 3/4 ", Fraction(3, 4)),
        (7, Fraction(7)),
        (Fraction(1, 3), Fraction(1, 3)),
        ("1e2", Fraction(100)),
    ]
    for value, expected in test_cases:
        assert as_fraction(value) == expected

    for bad in [0.5, True, "abc", "1/0"]:
        with pytest.raises(InputError):
            as_fraction(bad)


def test_orientation():
    """Test the sign of the orientation predicate."""
    assert orientation(P(0, 0), P(1, 0), P(0, 1)) == 1
    assert orientation(P(0, 0), P(0, 1), P(1, 0)) == -1
    assert orientation(P(0, 0), P(1, 1), P("1/3", "1/3")) == 0


def test_convex_hull_forms():
    """Test full, collinear, single and repeated inputs."""
    hull = convex_hull([P(0, 0), P(2, 0), P(2, 2), P(0, 2), P(1, 0), P(1, 1), P(0, 0)])
    assert set(hull.vertices) == {P(0, 0), P(2, 0), P(2, 2), P(0, 2)}
    assert hull.dim == 2
    assert area2(hull) == 8

    segment = convex_hull([P(0, 0), P(3, 3), P(1, 1), P(2, 2)])
    assert set(segment.vertices) == {P(0, 0), P(3, 3)}
    assert segment.dim == 1

    point = convex_hull([P(1, 1), P(1, 1)])
    assert point.vertices == (P(1, 1),)
    assert point.dim == 0

    assert convex_hull([]).is_empty
    assert convex_hull([]).dim == -1


def test_hull_contains_closed():
    """Test that boundary points belong to the hull."""
    hull = square(0, 2)
    test_cases = [
        (P(1, 1), True),
        (P(0, 1), True),
        (P(2, 2), True),
        (P(3, 1), False),
        (P("2.0001", 1), False),
    ]
    for p, expected in test_cases:
        assert hull.contains(p) is expected

    segment = convex_hull([P(0, 0), P(2, 2)])
    assert segment.contains(P(1, 1))
    assert not segment.contains(P(3, 3))
    assert not segment.contains(P(1, 0))


def test_half_planes_describe_polygon():
    """Test that the half-planes of each form hold exactly on the polygon."""
    for poly in [square(0, 2), convex_hull([P(0, 0), P(2, 2)]), convex_hull([P(1, 1)])]:
        planes = half_planes(poly)
        for v in poly.vertices:
            assert all(h.slack(v) >= 0 for h in planes)
        assert not all(h.slack(P(5, -1)) >= 0 for h in planes)


def test_intersect():
    """Test intersections of overlapping, touching and disjoint shapes."""
    overlap = intersect(square(0, 2), square(1, 3))
    assert set(overlap.vertices) == {P(1, 1), P(2, 1), P(2, 2), P(1, 2)}

    corner = intersect(square(0, 1), square(1, 2))
    assert corner.vertices == (P(1, 1),)

    assert intersect(square(0, 1), square(2, 3)) == EMPTY

    diagonal = intersect(convex_hull([P(-1, -1), P(3, 3)]), square(0, 2))
    assert set(diagonal.vertices) == {P(0, 0), P(2, 2)}


def _on_segment(p, a, b):
    return (
        orientation(a, b, p) == 0
        and min(a.x, b.x) <= p.x <= max(a.x, b.x)
        and min(a.y, b.y) <= p.y <= max(a.y, b.y)
    )


def _in_triangle(p, a, b, c):
    o = orientation(a, b, c)
    if o == 0:
        return _on_segment(p, a, b) or _on_segment(p, b, c) or _on_segment(p, a, c)
    return all(o * orientation(u, v, p) >= 0 for u, v in [(a, b), (b, c), (c, a)])


def _brute_force_vertices(points):
    """Points in no closed segment or triangle spanned by the other points."""
    vertices = set()
    for p in points:
        others = [q for q in points if q != p]
        if any(_on_segment(p, a, b) for a, b in combinations(others, 2)):
            continue
        if any(_in_triangle(p, a, b, c) for a, b, c in combinations(others, 3)):
            continue
        vertices.add(p)
    return vertices


def test_convex_hull_matches_brute_force(rng):
    """Test hull vertices and their order against an all-triangles scan."""
    for _ in range(25):
        points = list({
            P(Fraction(int(rng.integers(0, 40)), int(rng.integers(1, 4))), int(rng.integers(0, 10)))
            for _ in range(10)
        })
        hull = convex_hull(points)
        assert set(hull.vertices) == _brute_force_vertices(points)
        vs = hull.vertices
        if hull.dim == 2:
            assert all(orientation(vs[i - 2], vs[i - 1], vs[i]) > 0 for i in range(len(vs)))


def _inside(poly, xs, ys):
    vs = [(float(v.x), float(v.y)) for v in poly.vertices]
    inside = np.ones(len(xs), dtype=bool)
    for (ax, ay), (bx, by) in zip(vs, vs[1:] + vs[:1]):
        inside &= (bx - ax) * (ys - ay) - (by - ay) * (xs - ax) >= 0
    return inside


def test_intersect_area_matches_sampling(rng):
    """Test exact intersection areas of random triangles against uniform sampling."""
    draws = 100_000
    checked = 0
    while checked < 6:
        a = convex_hull([P(int(rng.integers(0, 10)), int(rng.integers(0, 10))) for _ in range(3)])
        b = convex_hull([P(int(rng.integers(0, 10)), int(rng.integers(0, 10))) for _ in range(3)])
        if a.dim < 2 or b.dim < 2:
            continue
        checked += 1
        xs, ys = rng.uniform(0, 10, draws), rng.uniform(0, 10, draws)
        share = (_inside(a, xs, ys) & _inside(b, xs, ys)).mean()
        estimate = 100 * share
        sigma = 100 * math.sqrt(share * (1 - share) / draws)
        exact = float(area2(intersect(a, b))) / 2
        assert abs(estimate - exact) <= 4 * sigma + 0.05


def test_interval_cover():
    """Test closed interval covers."""
    test_cases = [
        ((0, 4), [(0, 2), (2, 4)], True),
        ((0, 4), [(0, 2), (3, 4)], False),
        ((0, 4), [(1, 4)], False),
        ((0, 4), [(-1, 5)], True),
        ((0, 4), [], False),
        ((2, 2), [(2, 3)], True),
    ]
    for target, pieces, expected in test_cases:
        assert interval_cover(target, pieces) is expected


def test_covers_hull_examples():
    """Test hull covers for polygons, segments and points."""
    a, b, c, d = P(0, 0), P(2, 0), P(2, 2), P(0, 2)
    sq = {a, b, c, d}
    triangle = {a, b, d}
    test_cases = [
        (triangle, triangle, False),
        (sq, sq, True),
        (sq, {a}, False),
        (sq, {a, c}, True),
        (sq, {a, b}, False),
        ({a, P(1, 1), c}, {P(1, 1)}, True),
        ({a, P(1, 1), c}, {a, c}, True),
        ({a, P(1, 1), c}, {a}, False),
        ({a}, {a}, False),
        (sq | {P(1, 1)}, {P(1, 1)}, True),
        ({a, P(1, 0), b, c}, {a, b}, True),
        ({a, P(4, 0), P(0, 4), P(1, 1)}, {a, P(4, 0)}, False),
        ({a, P(4, 0), P(0, 4), P(1, 1)}, {a, P(4, 0), P(0, 4)}, True),
        (sq | {P(1, 0)}, {a, b}, True),
        (sq | {P(1, 1)}, {a, b}, False),
    ]
    for points, removed, expected in test_cases:
        assert covers_hull(points, removed) is expected


def test_small_cover_matches_area_cover(rng):
    """Test the vertex-based decision on small polygons against exact areas."""
    checked = 0
    while checked < 300:
        n = int(rng.integers(3, SMALL_COVER + 1))
        points = list({P(int(rng.integers(0, 5)), int(rng.integers(0, 5))) for _ in range(n)})
        if convex_hull(points).dim < 2:
            continue
        checked += 1
        for k in range(1, len(points) + 1):
            for removed in combinations(points, k):
                assert covers_hull(points, removed) is area_cover(points, removed)

    with pytest.raises(InputError):
        area_cover([P(0, 0), P(1, 1), P(2, 2)], [P(0, 0)])


def test_covers_hull_rejects_bad_input():
    """Test input checks of covers_hull."""
    with pytest.raises(InputError):
        covers_hull({P(0, 0), P(1, 0)}, set())
    with pytest.raises(InputError):
        covers_hull({P(0, 0), P(1, 0)}, {P(5, 5)})


@settings(max_examples=60, deadline=None)
@given(st.lists(rational_points(), min_size=2, max_size=5, unique=True), st.data())
def test_covers_hull_monotone(points, data):
    """Test that removing more points can only help cover the hull."""
    small = data.draw(st.sets(st.sampled_from(points), min_size=1))
    extra = data.draw(st.sets(st.sampled_from(points)))
    if covers_hull(points, small):
        assert covers_hull(points, small | extra)


@settings(max_examples=60, deadline=None)
@given(st.lists(rational_points(), min_size=3, max_size=6, unique=True))
def test_non_vertices_are_covered(points):
    """Test that a point which is not a hull vertex never escapes."""
    hull = convex_hull(points)
    for p in points:
        if p not in hull.vertices:
            assert covers_hull(points, {p})
        elif hull.dim >= 1:
            assert not covers_hull(points, {p})
