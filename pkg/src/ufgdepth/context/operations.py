"""
Derivation operators, closures, extent enumeration, implication respect and
VC dimension over a finite formal context.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import AbstractSet, FrozenSet, Iterable, List, Sequence

from ..errors import ResourceLimitError
from .formal_context import FormalContext

logger = logging.getLogger(__name__)

DEFAULT_ENUMERATE_LIMIT = 24
DEFAULT_VC_LIMIT = 20


@dataclass(frozen=True)
class Implication:
    """A -> B over object ids: every extent containing the premise contains the conclusion."""

    premise: FrozenSet[str]
    conclusion: FrozenSet[str]

    @classmethod
    def of(cls, ctx: FormalContext, premise: Iterable[str]) -> "Implication":
        """The implication A -> closure(A); both sides are validated against ctx."""
        premise = frozenset(premise)
        return cls(premise, closure(ctx, premise))


def intent_mask(ctx: FormalContext, object_mask: int) -> int:
    """Psi on bitmasks: attributes shared by every object in the mask."""
    result = ctx.all_attributes_mask
    rows = ctx.rows
    i = 0
    while object_mask:
        if object_mask & 1:
            result &= rows[i]
            if not result:
                break
        object_mask >>= 1
        i += 1
    return result


def extent_mask(ctx: FormalContext, attribute_mask: int) -> int:
    """Phi on bitmasks: objects having every attribute in the mask."""
    result = ctx.all_objects_mask
    cols = ctx.columns
    j = 0
    while attribute_mask:
        if attribute_mask & 1:
            result &= cols[j]
            if not result:
                break
        attribute_mask >>= 1
        j += 1
    return result


def closure_mask(ctx: FormalContext, object_mask: int) -> int:
    return extent_mask(ctx, intent_mask(ctx, object_mask))


def derive_intent(ctx: FormalContext, objects: AbstractSet[str]) -> FrozenSet[str]:
    """
    Attributes shared by all given objects.

    Args:
        ctx: Formal context
        objects: Object ids (the empty set yields every attribute)

    Returns:
        Frozen set of attribute ids
    """
    return ctx.attributes_of(intent_mask(ctx, ctx.object_mask(objects)))


def derive_extent(ctx: FormalContext, attributes: AbstractSet[str]) -> FrozenSet[str]:
    """
    Objects having all given attributes.

    Args:
        ctx: Formal context
        attributes: Attribute ids (the empty set yields every object)

    Returns:
        Frozen set of object ids
    """
    return ctx.objects_of(extent_mask(ctx, ctx.attribute_mask(attributes)))


def closure(ctx: FormalContext, objects: AbstractSet[str]) -> FrozenSet[str]:
    """Phi(Psi(A)); closure of the empty set is whatever Phi(M) yields, possibly empty."""
    return ctx.objects_of(closure_mask(ctx, ctx.object_mask(objects)))


def enumerate_extent_masks(ctx: FormalContext, limit: int = DEFAULT_ENUMERATE_LIMIT) -> List[int]:
    """
    All extents as object bitmasks, canonically ordered.

    Extents are the intersections of attribute columns; they are built by
    intersecting every known extent with each column in turn.

    Raises:
        ResourceLimitError: If both the object and attribute counts exceed the limit
    """
    if ctx.n_objects > limit and ctx.n_attributes > limit:
        raise ResourceLimitError(
            f"Extent enumeration limited to contexts with at most {limit} objects or attributes",
            {"limit": limit, "objects": ctx.n_objects, "attributes": ctx.n_attributes},
        )

    extents = {ctx.all_objects_mask}
    for column in ctx.columns:
        extents |= {extent & column for extent in extents}

    ordered = sorted(extents, key=lambda m: (bin(m).count("1"), _positions(m)))
    logger.debug("Enumerated extents", extra={"extents": len(ordered)})
    return ordered


def enumerate_extents(ctx: FormalContext, limit: int = DEFAULT_ENUMERATE_LIMIT) -> List[FrozenSet[str]]:
    """
    All distinct extents Phi(B), B a subset of the attributes.

    Sorted by size, then by object positions in context order. The full
    object set is always present; the empty set appears only if some
    attribute combination is shared by no object.
    """
    return [ctx.objects_of(m) for m in enumerate_extent_masks(ctx, limit)]


def respects(extent: AbstractSet[str], implication: Implication) -> bool:
    """True iff the premise is not contained in the set, or the conclusion is too."""
    if not implication.premise <= extent:
        return True
    return implication.conclusion <= extent


def vc_dimension(
    sets: Sequence[AbstractSet[str]],
    ground: AbstractSet[str],
    limit: int = DEFAULT_VC_LIMIT,
) -> int:
    """
    Size of the largest subset of the ground set shattered by the family.

    Raises:
        ResourceLimitError: If the ground set is larger than the limit
    """
    if len(ground) > limit:
        raise ResourceLimitError(
            f"VC dimension computation limited to ground sets of at most {limit} elements",
            {"limit": limit, "ground": len(ground)},
        )

    points = sorted(ground)
    index = {p: i for i, p in enumerate(points)}
    traces = {sum(1 << index[p] for p in s if p in index) for s in sets}
    if not traces:
        return 0

    best = 0
    for k in range(1, len(points) + 1):
        if len(traces) < 1 << k:
            break
        if not any(_shattered(traces, sum(1 << i for i in subset), k) for subset in combinations(range(len(points)), k)):
            # shattering is hereditary: no k-set shattered means no larger one either
            break
        best = k
    return best


def _shattered(traces: Iterable[int], subset_mask: int, k: int) -> bool:
    return len({t & subset_mask for t in traces}) == 1 << k


def _positions(mask: int) -> tuple:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)
