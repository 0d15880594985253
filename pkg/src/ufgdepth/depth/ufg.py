"""
Empirical and population ufg depth.
"""

import logging
from fractions import Fraction
from typing import Any, FrozenSet, List, Optional, Sequence

from ..closures import ClosureDescriptor, HierPrefixClosure
from ..engine import DEFAULT_MAX_N, PremiseCache, TupleCounts, count_tuples
from ..errors import InputError
from ..sample import Sample
from .hierarchical import hierarchical_counts
from .results import DepthResult, QueryDepth, Weights

logger = logging.getLogger(__name__)

NO_PREMISES = "no premises at any cardinality; all depths are zero"


def detect_J(counts: TupleCounts) -> FrozenSet[int]:
    """Cardinalities j with b_j > 0."""
    return frozenset(j for j in range(1, counts.j_max + 1) if counts.b_j(j) > 0)


def premise_counts(
    sample: Sample,
    queries: Sequence[Any],
    desc: ClosureDescriptor,
    j_max: Optional[int] = None,
    workers: int = 1,
    max_n: int = DEFAULT_MAX_N,
    cap: Optional[int] = None,
    progress_callback=None,
    cache: Optional[PremiseCache] = None,
    fast: bool = True,
) -> TupleCounts:
    """count_tuples, or the frequency-table path for hierarchical codes."""
    if fast and isinstance(desc, HierPrefixClosure) and (j_max is None or j_max == 2):
        return hierarchical_counts(sample, queries, desc)
    return count_tuples(
        sample, queries, desc,
        j_max=j_max, workers=workers, max_n=max_n, cap=cap,
        progress_callback=progress_callback, cache=cache, fast=fast,
    )


def depth_from_counts(
    counts: TupleCounts,
    queries: Sequence[Any],
    w: Weights,
    query_ids: Optional[Sequence[str]] = None,
    in_sample: Optional[Sequence[bool]] = None,
) -> DepthResult:
    """Combine per-cardinality counts into depths."""
    query_ids = list(query_ids) if query_ids is not None else [str(i + 1) for i in range(len(queries))]
    in_sample = list(in_sample) if in_sample is not None else [False] * len(queries)
    if len(query_ids) != len(queries):
        raise InputError("One id per query is required")

    J = detect_J(counts)
    warnings: List[str] = []
    if not J:
        logger.warning(NO_PREMISES, extra={"j_max": counts.j_max})
        warnings.append(NO_PREMISES)

    rows = []
    for q, (qid, element) in enumerate(zip(query_ids, queries)):
        a = tuple(counts.a_j(j, q) for j in range(1, counts.j_max + 1))
        terms = tuple(
            w.c(j) * a[j - 1] / counts.b_j(j) if j in J else Fraction(0)
            for j in range(1, counts.j_max + 1)
        )
        rows.append(QueryDepth(qid, element, sum(terms, Fraction(0)), a, terms, in_sample[q]))

    return DepthResult(tuple(rows), counts.b, J, w, tuple(warnings))


def ufg_depth(
    sample: Sample,
    queries: Sequence[Any],
    desc: ClosureDescriptor,
    w: Optional[Weights] = None,
    j_max: Optional[int] = None,
    query_ids: Optional[Sequence[str]] = None,
    workers: int = 1,
    max_n: int = DEFAULT_MAX_N,
    cap: Optional[int] = None,
    progress_callback=None,
    fast: bool = True,
) -> DepthResult:
    """
    Empirical ufg depth of each query with respect to the sample.

    Args:
        sample: Nonempty weighted sample
        queries: Elements of the descriptor's ground space
        desc: Closure descriptor
        w: Weights C_j (all 1 by default)
        j_max: Largest premise cardinality (defaults to the premise bound)
        query_ids: Ids reported for the queries (default 1..len)
        workers: Worker processes used for counting
        max_n: Object limit for j_max >= 4
        cap: Premise cap for finite contexts too large for the VC bound
        progress_callback: Forwarded to the counting loop
        fast: Use the frequency-table path for hierarchical codes and the
            closed form for mixed samples

    Returns:
        DepthResult with exact depths; an empty J yields zero depths and a warning
    """
    w = w or Weights()
    counts = premise_counts(
        sample, queries, desc, j_max=j_max, workers=workers, max_n=max_n, cap=cap,
        progress_callback=progress_callback, fast=fast,
    )
    validated = [desc.validate(q) for q in queries]
    sample_elements = set(desc.validate(e) for e in sample.elements)
    in_sample = [q in sample_elements for q in validated]
    result = depth_from_counts(counts, validated, w, query_ids, in_sample)
    logger.info(
        "Computed depths",
        extra={"queries": len(result.rows), "J": sorted(result.J), "maximum": str(result.maximum)},
    )
    return result


def population_depth(
    P: Sample,
    queries: Sequence[Any],
    desc: ClosureDescriptor,
    w: Optional[Weights] = None,
    j_max: Optional[int] = None,
    query_ids: Optional[Sequence[str]] = None,
) -> DepthResult:
    """
    Depth under a finitely supported probability measure.

    P lists the support with probabilities as weights (they must sum to 1).
    For i.i.d. draws the probability that j draws form a given premise is
    j! times the product of its point masses; the factor cancels in each
    ratio, so the exact expectation is the weighted count over the support.
    """
    total = P.total_weight
    if total != 1:
        raise InputError(f"Probabilities must sum to 1, got {total}", {"total": str(total)})
    return ufg_depth(P, queries, desc, w=w, j_max=j_max, query_ids=query_ids)
