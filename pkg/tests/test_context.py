"""
Tests for formal contexts, derivation operators and extent enumeration.
"""
from itertools import chain, combinations

import numpy as np
import pytest

from ufgdepth.context import (
    FormalContext,
    Implication,
    closure,
    derive_extent,
    derive_intent,
    enumerate_extents,
    respects,
    vc_dimension,
)
from ufgdepth.errors import InputError, ResourceLimitError
from fixtures.generators import random_context


def _subsets(items):
    items = list(items)
    return [frozenset(s) for s in chain.from_iterable(combinations(items, k) for k in range(len(items) + 1))]


def test_derive_intent_vegetation(vegetation_context):
    """Test the intent of single observations under nominal scaling."""
    ctx = vegetation_context
    test_cases = [
        ({"g1"}, {"dist."}),
        ({"g2"}, {"grass."}),
        ({"g3"}, {"prim."}),
        ({"g1", "g2"}, set()),
    ]

    for objects, expected in test_cases:
        assert derive_intent(ctx, objects) == frozenset(expected)


def test_derive_extent_vegetation(vegetation_context):
    """Test the extent of attribute sets under nominal scaling."""
    ctx = vegetation_context
    assert derive_extent(ctx, {"prim."}) == {"g3"}
    assert derive_extent(ctx, {"tran."}) == frozenset()
    assert derive_extent(ctx, {"prim.", "dist."}) == frozenset()


def test_empty_set_derivations(vegetation_context):
    """Test that the empty set derives to the full opposite side."""
    ctx = vegetation_context
    assert derive_intent(ctx, set()) == frozenset(ctx.attributes)
    assert derive_extent(ctx, set()) == frozenset(ctx.objects)


def test_derivations_match_direct_scan(rng):
    """Test the bitmask operators against row and column scans of the matrix."""
    for _ in range(20):
        ctx = random_context(rng, 5, 4)
        matrix = ctx.incidence
        for subset in _subsets(ctx.objects):
            rows = [ctx.object_position(g) for g in subset]
            shared = np.all(matrix[rows], axis=0) if rows else np.ones(ctx.n_attributes, dtype=bool)
            expected = frozenset(m for m, keep in zip(ctx.attributes, shared) if keep)
            assert derive_intent(ctx, subset) == expected
        for subset in _subsets(ctx.attributes):
            cols = [ctx.attribute_position(m) for m in subset]
            having = np.all(matrix[:, cols], axis=1) if cols else np.ones(ctx.n_objects, dtype=bool)
            expected = frozenset(g for g, keep in zip(ctx.objects, having) if keep)
            assert derive_extent(ctx, subset) == expected


def test_closure_axioms(rng):
    """Test that closure is extensive, monotone and idempotent."""
    for _ in range(10):
        ctx = random_context(rng, 5, 4)
        subsets = _subsets(ctx.objects)
        closed = {s: closure(ctx, s) for s in subsets}
        for s in subsets:
            assert s <= closed[s]
            assert closure(ctx, closed[s]) == closed[s]
            for t in subsets:
                if s <= t:
                    assert closed[s] <= closed[t]


def test_unknown_ids_raise(vegetation_context):
    """Test that unknown object and attribute ids are input errors."""
    with pytest.raises(InputError):
        derive_intent(vegetation_context, {"g9"})
    with pytest.raises(InputError):
        derive_extent(vegetation_context, {"forest"})


def test_context_shape_checks():
    """Test the invariants of FormalContext."""
    with pytest.raises(InputError):
        FormalContext(("g1", "g1"), ("m1",), np.array([[1], [0]]))
    with pytest.raises(InputError):
        FormalContext(("g1", "g2"), ("m1", "m1"), np.ones((2, 2)))
    with pytest.raises(InputError):
        FormalContext(("g1", "g2"), ("m1",), np.ones((3, 1)))


def test_enumerate_extents_equals_all_closures(rng):
    """Test that the enumerated extents are exactly the closures of object sets."""
    for _ in range(10):
        ctx = random_context(rng, 6, 4)
        extents = enumerate_extents(ctx)
        assert len(extents) == len(set(extents))
        expected = {closure(ctx, s) for s in _subsets(ctx.objects)}
        assert set(extents) == expected
        assert frozenset(ctx.objects) in extents
        sizes = [len(e) for e in extents]
        assert sizes == sorted(sizes)


def test_enumerate_extents_vegetation(vegetation_context):
    """Test the extents of the nominal scaling: singletons, the empty set and everything."""
    extents = enumerate_extents(vegetation_context)
    assert set(extents) == {
        frozenset(),
        frozenset({"g1"}),
        frozenset({"g2"}),
        frozenset({"g3"}),
        frozenset({"g1", "g2", "g3"}),
    }


def test_enumerate_extents_limit():
    """Test that large contexts are refused."""
    ctx = FormalContext(
        tuple(f"g{i}" for i in range(25)), tuple(f"m{j}" for j in range(25)), np.eye(25, dtype=bool)
    )
    with pytest.raises(ResourceLimitError):
        enumerate_extents(ctx, limit=24)


def test_implication_respect(vegetation_context):
    """Test that every extent respects every implication A -> closure(A)."""
    ctx = vegetation_context
    extents = enumerate_extents(ctx)
    for premise in _subsets(ctx.objects):
        imp = Implication.of(ctx, premise)
        assert all(respects(e, imp) for e in extents)

    # {g1, g2} -> everything is violated by a set containing g1, g2 only
    imp = Implication.of(ctx, {"g1", "g2"})
    assert not respects(frozenset({"g1", "g2"}), imp)
    assert respects(frozenset({"g1"}), imp)


def test_vc_dimension():
    """Test the VC dimension of small families."""
    ground = frozenset({"a", "b", "c"})
    test_cases = [
        (_subsets(ground), 3),
        ([frozenset(), frozenset({"a"}), frozenset({"b"}), frozenset({"c"})], 1),
        ([frozenset(ground)], 0),
        # intervals on a line of three points shatter pairs but not the triple
        ([frozenset(), frozenset("a"), frozenset("b"), frozenset("c"), frozenset("ab"), frozenset("bc"), frozenset("abc")], 2),
    ]

    for family, expected in test_cases:
        assert vc_dimension(family, ground) == expected

    with pytest.raises(ResourceLimitError):
        vc_dimension([frozenset()], frozenset(str(i) for i in range(21)), limit=20)
