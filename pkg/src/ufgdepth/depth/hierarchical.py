"""
Premise counting for hierarchical codes from the code frequency table.

Premises have one or two objects, so b_1, b_2 and a_1, a_2 follow from the
weight of each code: singletons count when duplicates are allowed and the
ground space has at least two codes, and a pair of distinct codes counts
when the class of their common prefix holds a third ground code. a_2(q)
sums the pair weights over the prefixes of q.
"""

import logging
from collections import defaultdict
from fractions import Fraction
from itertools import combinations
from typing import Dict, Sequence

from ..closures import HierPrefixClosure, common_prefix
from ..engine import TupleCounts
from ..sample import Sample, aggregate_objects

logger = logging.getLogger(__name__)


def code_weights(sample: Sample) -> Dict[str, Fraction]:
    """Total observation weight per code, in first-seen order."""
    weights: Dict[str, Fraction] = {}
    for obs in sample:
        weights[obs.element] = weights.get(obs.element, Fraction(0)) + Fraction(obs.weight)
    return weights


def hierarchical_counts(sample: Sample, queries: Sequence[str], desc: HierPrefixClosure) -> TupleCounts:
    """
    Same result as count_tuples with j_max = 2, without enumerating object pairs.

    Args:
        sample: Sample of codes
        queries: Query codes
        desc: Hierarchical descriptor

    Returns:
        TupleCounts with j_max = 2
    """
    sample = sample.validated(desc)
    queries = [desc.validate(q) for q in queries]
    objects = aggregate_objects(sample, desc)
    weights: Dict[str, Fraction] = defaultdict(Fraction)
    for obj in objects:
        weights[obj.element] += obj.weight
    codes = sorted(weights)

    singles = desc.duplicates_allowed and len(desc.ground) >= 2
    b1 = sum(weights.values(), Fraction(0)) if singles else Fraction(0)
    a1 = tuple(weights.get(q, Fraction(0)) if singles else Fraction(0) for q in queries)

    by_prefix: Dict[str, Fraction] = defaultdict(Fraction)
    class_sizes: Dict[str, int] = {}
    excluded = 0
    for c1, c2 in combinations(codes, 2):
        prefix = common_prefix((c1, c2))
        if prefix not in class_sizes:
            class_sizes[prefix] = len(desc.class_codes(prefix))
        if class_sizes[prefix] < 3:
            excluded += 1
            continue
        by_prefix[prefix] += weights[c1] * weights[c2]

    if excluded:
        logger.warning(
            "Pairs of distinct codes excluded because their common class has no third code",
            extra={"pairs": excluded, "ground_mode": desc.ground_mode},
        )

    b2 = sum(by_prefix.values(), Fraction(0))
    a2 = tuple(
        sum((by_prefix.get(q[:k], Fraction(0)) for k in range(len(q) + 1)), Fraction(0))
        for q in queries
    )
    logger.debug("Hierarchical counts", extra={"codes": len(codes), "b_1": str(b1), "b_2": str(b2)})
    return TupleCounts(j_max=2, b=(b1, b2), a=(a1, a2), n_objects=len(objects))
