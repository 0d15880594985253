"""Premise tests and weighted premise counting."""

from .counting import DEFAULT_MAX_N, PremiseCache, TupleCounts, count_tuples, resolve_j_max
from .mixed_counts import MixedCounter
from .premises import (
    MIXED_LABELS,
    MIXED_MAX_PREMISE,
    PremiseVerdict,
    is_premise,
    is_premise_finite,
    is_premise_hier,
    is_premise_mixed,
    mixed_descriptor,
)
from .query_index import QueryIndex

__all__ = [
    "DEFAULT_MAX_N",
    "MIXED_LABELS",
    "MIXED_MAX_PREMISE",
    "MixedCounter",
    "PremiseCache",
    "PremiseVerdict",
    "QueryIndex",
    "TupleCounts",
    "count_tuples",
    "is_premise",
    "is_premise_finite",
    "is_premise_hier",
    "is_premise_mixed",
    "mixed_descriptor",
    "resolve_j_max",
]
