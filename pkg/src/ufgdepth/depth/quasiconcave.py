"""
Quasiconcave hull of a depth function on a finite candidate set.

A function is quasiconcave when every upper level set (contour)
{g : D(g) >= alpha} is closed. The hull lifts each candidate to the largest
level whose contour closure contains it, which gives the smallest
quasiconcave function above D.
"""

import logging
import math
from fractions import Fraction
from typing import Any, Dict, FrozenSet, Hashable, List, Mapping, Union

from ..closures import ClosureDescriptor, HierPrefixClosure, common_prefix
from ..context import FormalContext, derive_intent

logger = logging.getLogger(__name__)

Value = Union[Fraction, int]


def contour(values: Mapping[Hashable, Value], alpha: Value) -> List[Hashable]:
    """Candidates whose value is at least alpha."""
    return [g for g, v in values.items() if v >= alpha]


def quasiconcave_hull(depths: Mapping[Hashable, Value], desc: ClosureDescriptor) -> Dict[Hashable, Value]:
    """
    D^qc(g) = max{alpha : g in close(contour(D, alpha))}, alpha over the values of D.

    Args:
        depths: Depth per candidate element (keys must be valid elements of desc)
        desc: Closure descriptor

    Returns:
        Lifted depth per candidate; pointwise at least the input
    """
    levels = sorted(set(depths.values()), reverse=True)
    result: Dict[Hashable, Value] = {}
    pending = set(depths)
    for alpha in levels:
        if not pending:
            break
        closed = desc.close([desc.validate(g) for g in contour(depths, alpha)])
        for g in [g for g in pending if closed.contains(desc.validate(g))]:
            result[g] = alpha
            pending.discard(g)
    logger.debug("Quasiconcave hull", extra={"levels": len(levels), "distinct_out": len(set(result.values()))})
    return {g: result[g] for g in depths}


def is_quasiconcave(values: Mapping[Hashable, Value], desc: ClosureDescriptor) -> bool:
    """Whether every contour is closed within the candidate set."""
    for alpha in set(values.values()):
        members = contour(values, alpha)
        closed = desc.close([desc.validate(g) for g in members])
        inside = {g for g in values if closed.contains(desc.validate(g))}
        if inside != set(members):
            return False
    return True


def qc_loss(
    candidate: Mapping[Hashable, Value],
    depths: Mapping[Hashable, Value],
    P: Mapping[Hashable, Value],
) -> Union[Fraction, float]:
    """
    Upward-only loss of a candidate majorant.

    Infinite if the candidate lies below the depth anywhere, otherwise the
    P-weighted total excess sum P(g) * (E(g) - D(g)).
    """
    if any(candidate[g] < depths[g] for g in depths):
        return math.inf
    return sum((Fraction(P.get(g, 0)) * (candidate[g] - depths[g]) for g in depths), Fraction(0))


def contour_intents(depths: Mapping[str, Value], ctx: FormalContext) -> List[FrozenSet[str]]:
    """
    Distinct attribute sets shared by the contours, from the deepest level down.

    Applied to a quasiconcave depth this lists the intents describing its
    contour extents.
    """
    out: List[FrozenSet[str]] = []
    for alpha in sorted(set(depths.values()), reverse=True):
        intent = derive_intent(ctx, frozenset(contour(depths, alpha)))
        if intent not in out:
            out.append(intent)
    return out


def contour_prefixes(depths: Mapping[str, Value], desc: HierPrefixClosure) -> List[str]:
    """Distinct common code prefixes of the contours, from the deepest level down."""
    out: List[str] = []
    for alpha in sorted(set(depths.values()), reverse=True):
        prefix = common_prefix(contour(depths, alpha))
        if prefix not in out:
            out.append(prefix)
    return out
