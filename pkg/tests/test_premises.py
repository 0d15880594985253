"""
Tests for premise checks on finite contexts, codes, points and mixed data.
"""
from fractions import Fraction
from itertools import combinations

import pytest

from fixtures.generators import general_position_points, random_context
from ufgdepth.closures import CodeCatalog, Convex2DClosure, FiniteContextClosure, HierPrefixClosure
from ufgdepth.engine import is_premise, is_premise_finite, is_premise_hier, is_premise_mixed, mixed_descriptor
from ufgdepth.errors import InputError
from ufgdepth.geometry import Point2
from ufgdepth.oracle import ALL_FAMILIES, MAXIMAL_ONLY, OracleConfig, premise_oracle


@pytest.fixture
def catalog():
    return CodeCatalog.from_codes(["11", "12", "13", "21", "22", "23", "31", "32", "33"])


def test_finite_premises(vegetation_context):
    """Test premise verdicts on the nominal vegetation context."""
    test_cases = [
        ({"g1"}, False),
        ({"g1", "g2"}, True),
        ({"g2", "g3"}, True),
        ({"g1", "g2", "g3"}, False),
    ]
    for objects, expected in test_cases:
        assert is_premise_finite(vegetation_context, objects).is_premise is expected

    verdict = is_premise_finite(vegetation_context, {"g1", "g2"})
    assert verdict.witness == "g3"
    assert bool(verdict)


def test_finite_premise_rejects_empty_set(vegetation_context):
    """Test that the empty set is refused."""
    with pytest.raises(InputError):
        is_premise_finite(vegetation_context, set())


def test_closed_sets_are_never_premises(rng):
    """Test that a set equal to its closure fails the first condition."""
    for _ in range(10):
        ctx = random_context(rng, 6, 4)
        desc = FiniteContextClosure(ctx)
        for k in range(1, 4):
            for objects in combinations(ctx.objects, k):
                if desc.close(list(objects)).objects == frozenset(objects):
                    assert not is_premise_finite(ctx, set(objects))
                    assert not premise_oracle(ctx, list(objects))


def test_finite_premises_match_oracle(rng):
    """Test agreement with the definitional check in both subset-family modes."""
    maximal = OracleConfig(mode=MAXIMAL_ONLY)
    every = OracleConfig(mode=ALL_FAMILIES)
    for _ in range(8):
        ctx = random_context(rng, 6, 5, density=0.4)
        for k in range(1, 5):
            for objects in combinations(ctx.objects, k):
                expected = is_premise_finite(ctx, set(objects)).is_premise
                assert premise_oracle(ctx, list(objects), maximal) is expected
                assert premise_oracle(ctx, list(objects), every) is expected


def test_hier_premises(catalog):
    """Test singleton, pair and triple verdicts for codes."""
    desc = HierPrefixClosure(catalog)
    test_cases = [
        (["11"], True),
        (["11", "12"], True),
        (["11", "21"], True),
        (["11", "11"], False),
        (["11", "12", "13"], False),
    ]
    for codes, expected in test_cases:
        assert is_premise_hier(codes, desc).is_premise is expected

    assert is_premise_hier(["11", "12"], desc).witness == "13"
    assert is_premise_hier(["11", "21"], desc).witness == "12"


def test_hier_premises_depend_on_ground(catalog):
    """Test how duplicates and the ground mode change the verdicts."""
    single = HierPrefixClosure(catalog, duplicates_allowed=False)
    assert not is_premise_hier(["11"], single)
    assert is_premise_hier(["11", "12"], single)

    sampled = HierPrefixClosure(catalog, ground_mode="sample", sample_codes=("11", "12", "21"))
    assert not is_premise_hier(["11", "12"], sampled)
    assert is_premise_hier(["11", "21"], sampled)

    lonely = HierPrefixClosure(catalog, ground_mode="sample", sample_codes=("11",))
    assert not is_premise_hier(["11"], lonely)


def test_hier_premises_match_oracle(catalog):
    """Test agreement with the explicit object model of the code tree."""
    for duplicates in (True, False):
        desc = HierPrefixClosure(catalog, duplicates_allowed=duplicates)
        for k in (1, 2):
            for codes in combinations(catalog.codes, k):
                expected = is_premise_hier(list(codes), desc).is_premise
                assert premise_oracle(desc, list(codes)) is expected


def test_plane_premises():
    """Test that pairs and proper triangles are premises and collinear triples are not."""
    desc = Convex2DClosure()
    P = Point2
    test_cases = [
        ([P(0, 0)], False),
        ([P(0, 0), P(3, 1)], True),
        ([P(0, 0), P(4, 0), P(0, 4)], True),
        ([P(0, 0), P(1, 1), P(2, 2)], False),
        ([P(0, 0), P(4, 0), P(4, 4), P(0, 4)], False),
        ([P(0, 0), P(4, 0), P(0, 4), P(1, 1)], False),
    ]
    for points, expected in test_cases:
        assert is_premise(desc, points).is_premise is expected
        assert premise_oracle(desc, points) is expected


def test_plane_premise_characterization(rng):
    """Test that among sets of up to four points in general position only pairs and triples are premises."""
    desc = Convex2DClosure()
    for _ in range(50):
        points = [
            Point2(Fraction(p.x, 3), Fraction(p.y, 2))
            for p in general_position_points(rng, 12)
        ]
        for k in range(1, 5):
            expected = k in (2, 3)
            for subset in combinations(points, k):
                assert is_premise(desc, list(subset)).is_premise is expected


def test_mixed_premises():
    """Test mixed premises of one, two and four elements."""
    desc = mixed_descriptor(["a", "b"])
    zero = Fraction(0)
    e1 = (Point2(0, 0), "a", zero)
    e2 = (Point2(4, 0), "a", zero)
    e3 = (Point2(0, 4), "a", Fraction(5))
    e4 = (Point2(1, 1), "b", zero)

    assert not is_premise_mixed({e1}, desc)
    assert is_premise_mixed({e1, e2}, desc)

    verdict = is_premise_mixed({e1, e2, e3, e4}, desc)
    assert verdict.is_premise
    assert dict(verdict.assignment) == {
        e1: "spatial",
        e2: "spatial",
        e3: "elevation",
        e4: "vegetation",
    }
    assert premise_oracle(desc, [e1, e2, e3, e4])


def test_mixed_premise_errors():
    """Test the size bound and conflicting covariates."""
    desc = mixed_descriptor(["a", "b"])
    five = {(Point2(i, i * i), "a", Fraction(i)) for i in range(5)}
    with pytest.raises(InputError):
        is_premise_mixed(five, desc)

    clash = {(Point2(0, 0), "a", Fraction(1)), (Point2(0, 0), "b", Fraction(1))}
    with pytest.raises(InputError):
        is_premise_mixed(clash, desc)
