"""
Tests for the quasiconcave hull, contours and the upward-only loss.
"""
import math
from fractions import Fraction
from itertools import combinations

from fixtures.generators import random_context, random_weights
from ufgdepth.closures import FiniteContextClosure
from ufgdepth.context import FormalContext
from ufgdepth.depth import (
    contour,
    contour_intents,
    is_quasiconcave,
    qc_loss,
    quasiconcave_hull,
    ufg_depth,
)
from ufgdepth.sample import Sample


def _minimal_majorant(values, desc):
    """max over nonempty S with g in close(S) of min over S."""
    out = {g: None for g in values}
    objects = list(values)
    for k in range(1, len(objects) + 1):
        for subset in combinations(objects, k):
            low = min(values[g] for g in subset)
            for g in desc.close(list(subset)).objects:
                if out[g] is None or low > out[g]:
                    out[g] = low
    return out


def test_contour():
    """Test upper level sets."""
    values = {"a": 3, "b": 1, "c": 2}
    assert contour(values, 2) == ["a", "c"]
    assert contour(values, 4) == []


def test_hull_on_vegetation_context(vegetation_context):
    """Test the hull of a depth that is not quasiconcave."""
    desc = FiniteContextClosure(vegetation_context)
    depths = {"g1": Fraction(1, 2), "g2": Fraction(1, 2), "g3": Fraction(0)}
    assert not is_quasiconcave(depths, desc)

    hull = quasiconcave_hull(depths, desc)
    assert hull == {"g1": Fraction(1, 2), "g2": Fraction(1, 2), "g3": Fraction(1, 2)}
    assert is_quasiconcave(hull, desc)


def test_hull_of_random_depths(rng):
    """Test that the hull is quasiconcave, lies above the depth and is the smallest such function."""
    for _ in range(50):
        n = int(rng.integers(4, 9))
        ctx = random_context(rng, n, 5)
        desc = FiniteContextClosure(ctx)
        objects = list(ctx.objects)
        depths = ufg_depth(
            Sample.from_elements(objects, weights=random_weights(rng, n)), objects, desc, query_ids=objects
        ).as_dict()

        hull = quasiconcave_hull(depths, desc)
        assert is_quasiconcave(hull, desc)
        assert all(hull[g] >= depths[g] for g in objects)
        assert hull == _minimal_majorant(depths, desc)
        assert quasiconcave_hull(hull, desc) == hull


def test_qc_loss():
    """Test that only upward deviations are accepted and weighted by P."""
    depths = {"a": Fraction(1), "b": Fraction(1, 2)}
    P = {"a": Fraction(1, 4), "b": Fraction(3, 4)}
    assert qc_loss(depths, depths, P) == 0
    assert qc_loss({"a": Fraction(1), "b": Fraction(1)}, depths, P) == Fraction(3, 8)
    assert qc_loss({"a": Fraction(1, 2), "b": Fraction(1)}, depths, P) == math.inf


def test_contour_intents():
    """Test the attribute sets describing nested contours."""
    ctx = FormalContext.from_rows(
        ["g1", "g2", "g3"],
        ["m1", "m2"],
        [[1, 1], [1, 0], [0, 0]],
    )
    depths = {"g1": 2, "g2": 1, "g3": 0}
    assert contour_intents(depths, ctx) == [frozenset({"m1", "m2"}), frozenset({"m1"}), frozenset()]
