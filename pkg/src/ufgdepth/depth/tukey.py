"""
Generalized Tukey depth: one minus the largest sample mass of an extent excluding the query.
"""

import logging
from collections import defaultdict
from fractions import Fraction
from typing import Any, Dict, Sequence

from ..closures import ClosureDescriptor, FiniteContextClosure, HierPrefixClosure
from ..context import enumerate_extent_masks
from ..errors import InputError, UnsupportedOperationError
from ..sample import Sample

logger = logging.getLogger(__name__)


def generalized_tukey(sample: Sample, queries: Sequence[Any], desc: ClosureDescriptor) -> Dict[Any, Fraction]:
    """
    T(g) = 1 - max{P(E) : E an extent with g not in E}, with max over nothing = 0.

    Supported for finite contexts (extents enumerated) and hierarchical codes
    (extents are the prefix classes, the empty set and the whole space).

    Raises:
        UnsupportedOperationError: For spatial, interval, nominal and product descriptors
    """
    total = sample.total_weight
    if total <= 0:
        raise InputError("Sample has zero total weight")
    sample = sample.validated(desc)
    queries = [desc.validate(q) for q in queries]

    if isinstance(desc, FiniteContextClosure):
        return _finite_tukey(sample, queries, desc, total)
    if isinstance(desc, HierPrefixClosure):
        return _hier_tukey(sample, queries, total)
    raise UnsupportedOperationError(
        f"Generalized Tukey depth needs an enumerable extent family (finite context or hierarchical codes), not {desc.kind}",
        {"descriptor": desc.kind, "supported": ["finite", "hier"]},
    )


def _finite_tukey(sample: Sample, queries, desc: FiniteContextClosure, total: Fraction) -> Dict[Any, Fraction]:
    ctx = desc.context
    masses: Dict[int, Fraction] = {}
    for mask in enumerate_extent_masks(ctx, desc.enumerate_limit):
        masses[mask] = sum(
            (Fraction(obs.weight) for obs in sample if mask >> ctx.object_position(obs.element) & 1),
            Fraction(0),
        )
    out = {}
    for q in queries:
        bit = 1 << ctx.object_position(q)
        excluding = [m for mask, m in masses.items() if not mask & bit]
        out[q] = 1 - max(excluding, default=Fraction(0)) / total
    return out


def _hier_tukey(sample: Sample, queries, total: Fraction) -> Dict[Any, Fraction]:
    # nonempty prefixes carry the class masses; the empty set has mass zero
    masses: Dict[str, Fraction] = defaultdict(Fraction)
    for obs in sample:
        for k in range(1, len(obs.element) + 1):
            masses[obs.element[:k]] += Fraction(obs.weight)
    out = {}
    for q in queries:
        excluding = [m for prefix, m in masses.items() if not q.startswith(prefix)]
        out[q] = 1 - max(excluding, default=Fraction(0)) / total
    logger.debug("Tukey depth", extra={"prefixes": len(masses), "distinct": len(set(out.values()))})
    return out
