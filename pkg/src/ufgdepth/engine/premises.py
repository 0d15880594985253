"""
Premise tests: does a finite set A satisfy (C1) A is a proper subset of its
closure and (C2) its closure is not the union of the closures of its proper
subsets?

By monotonicity only the omit-one subsets A - {a} need checking in (C2).
"""

import logging
from dataclasses import dataclass
from typing import AbstractSet, Any, Dict, Optional, Sequence, Tuple

from ..closures import (
    ClosureDescriptor,
    Convex2DClosure,
    FiniteContextClosure,
    HierPrefixClosure,
    InterordinalClosure,
    NominalClosure,
    ProductClosure,
)
from ..context import FormalContext, closure_mask
from ..errors import InputError

logger = logging.getLogger(__name__)

MIXED_LABELS = ("spatial", "vegetation", "elevation")
MIXED_MAX_PREMISE = 4


@dataclass(frozen=True)
class PremiseVerdict:
    """
    Outcome of a premise test.

    `witness` is an element of the closure outside every omit-one closure
    (finite and hierarchical tests); `assignment` pairs each element with the
    coordinate through which the closure escapes its omit-one closure
    (product tests).
    """

    is_premise: bool
    witness: Optional[Any] = None
    assignment: Optional[Tuple[Tuple[Any, str], ...]] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.is_premise


NOT_C1 = "closure adds no object (C1 fails)"
NOT_C2 = "closure is covered by closures of proper subsets (C2 fails)"


def mixed_descriptor(categories: Sequence[str]) -> ProductClosure:
    """Spatial x vegetation x elevation product over a vegetation category list."""
    return ProductClosure(
        (Convex2DClosure(), NominalClosure(tuple(categories)), InterordinalClosure()),
        MIXED_LABELS,
    )


def is_premise_finite(ctx: FormalContext, objects: AbstractSet[str]) -> PremiseVerdict:
    """
    Premise test on a finite formal context.

    Args:
        ctx: Formal context
        objects: Nonempty set of object ids

    Returns:
        PremiseVerdict whose witness is an object of the closure outside all
        omit-one closures
    """
    if not objects:
        raise InputError("Premise test needs a nonempty set")
    desc = FiniteContextClosure(ctx)
    values = ctx.sorted_objects(objects)
    own = ctx.object_mask(values)
    if closure_mask(ctx, own) == own:
        return PremiseVerdict(False, reason=NOT_C1)
    escape = desc.escape_mask(values, range(len(values)))
    if not escape:
        return PremiseVerdict(False, reason=NOT_C2)
    witness = ctx.objects[(escape & -escape).bit_length() - 1]
    return PremiseVerdict(True, witness=witness)


def is_premise_hier(codes: Sequence[str], desc: HierPrefixClosure) -> PremiseVerdict:
    """
    Premise test for hierarchical codes, one entry per distinct object.

    Singletons need a second object with the same code (duplicates) and a
    ground space with at least two codes; pairs of equal codes never
    qualify; a pair of distinct codes qualifies iff the class of their
    common prefix holds a third code; three or more objects never qualify.
    """
    codes = [desc.validate(c) for c in codes]
    if not codes:
        raise InputError("Premise test needs a nonempty set")
    if len(codes) == 1:
        if not desc.duplicates_allowed:
            return PremiseVerdict(False, reason=NOT_C1)
        escape = desc.escape_codes(codes, (0,))
        if not escape:
            return PremiseVerdict(False, reason=NOT_C2)
        return PremiseVerdict(True, witness=codes[0])
    if len(codes) > 2:
        return PremiseVerdict(False, reason="hierarchical premises have at most two objects")
    if codes[0] == codes[1]:
        return PremiseVerdict(False, reason=NOT_C2)
    escape = desc.escape_codes(codes, (0, 1))
    if not escape:
        return PremiseVerdict(False, reason="common prefix class holds no third code (C2 fails)")
    return PremiseVerdict(True, witness=min(escape))


def is_premise_mixed(elements: AbstractSet[tuple], desc: ProductClosure) -> PremiseVerdict:
    """
    Premise test for spatial x vegetation x elevation triples.

    Args:
        elements: One to four distinct (Point2, category, elevation) triples
        desc: Mixed product descriptor (see mixed_descriptor)

    Raises:
        InputError: More than four elements, or a location carrying two
            different covariate pairs
    """
    values = sorted({desc.validate(e) for e in elements}, key=_mixed_key)
    if not values:
        raise InputError("Premise test needs a nonempty set")
    if len(values) > MIXED_MAX_PREMISE:
        raise InputError(
            f"Mixed premises have at most {MIXED_MAX_PREMISE} elements, got {len(values)}",
            {"bound": MIXED_MAX_PREMISE},
        )
    spatial = _coordinate(desc, "convex2d")
    locations: Dict[Any, tuple] = {}
    for v in values:
        rest = tuple(x for i, x in enumerate(v) if i != spatial)
        if locations.setdefault(v[spatial], rest) != rest:
            raise InputError(
                f"Location {v[spatial]} carries conflicting covariates",
                {"location": str(v[spatial])},
            )
    return _product_verdict(desc, values)


def _mixed_key(element: tuple) -> tuple:
    return tuple(str(x) for x in element)


def _coordinate(desc: ProductClosure, kind: str) -> int:
    for i, component in enumerate(desc.components):
        if component.kind == kind:
            return i
    raise InputError(f"Product has no {kind} component")


def _product_verdict(desc: ProductClosure, values: Sequence[tuple]) -> PremiseVerdict:
    if len(values) == 1:
        return _singleton_verdict(desc, values[0])
    assignment = desc.escape_assignment(values, range(len(values)))
    if assignment is None:
        return PremiseVerdict(False, reason=NOT_C2)
    return PremiseVerdict(
        True,
        assignment=tuple((values[g], desc.labels[c]) for g, c in sorted(assignment.items())),
    )


def _singleton_verdict(desc: ClosureDescriptor, value: Any) -> PremiseVerdict:
    if not desc.singleton_exceeds(value):
        return PremiseVerdict(False, reason=NOT_C1)
    if not desc.escapes([value], (0,)):
        return PremiseVerdict(False, reason=NOT_C2)
    return PremiseVerdict(True)


def is_premise(desc: ClosureDescriptor, values: Sequence[Any]) -> PremiseVerdict:
    """
    Premise test for any descriptor; `values` lists one validated element per distinct object.
    """
    if not values:
        raise InputError("Premise test needs a nonempty set")
    if isinstance(desc, FiniteContextClosure):
        return is_premise_finite(desc.context, frozenset(values))
    if isinstance(desc, HierPrefixClosure):
        return is_premise_hier(values, desc)
    if isinstance(desc, ProductClosure):
        return _product_verdict(desc, values)
    if len(values) == 1:
        return _singleton_verdict(desc, values[0])
    if desc.escapes(values, range(len(values))):
        return PremiseVerdict(True)
    return PremiseVerdict(False, reason=NOT_C2)
