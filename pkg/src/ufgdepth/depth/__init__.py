"""Depth functionals."""

from .hierarchical import code_weights, hierarchical_counts
from .medians import finest_mode, topdown_median
from .quasiconcave import (
    contour,
    contour_intents,
    contour_prefixes,
    is_quasiconcave,
    qc_loss,
    quasiconcave_hull,
)
from .results import DepthResult, QueryDepth, Weights
from .tukey import generalized_tukey
from .ufg import NO_PREMISES, depth_from_counts, detect_J, population_depth, premise_counts, ufg_depth

__all__ = [
    "DepthResult",
    "NO_PREMISES",
    "QueryDepth",
    "Weights",
    "code_weights",
    "contour",
    "contour_intents",
    "contour_prefixes",
    "depth_from_counts",
    "detect_J",
    "finest_mode",
    "generalized_tukey",
    "hierarchical_counts",
    "is_quasiconcave",
    "population_depth",
    "premise_counts",
    "qc_loss",
    "quasiconcave_hull",
    "topdown_median",
    "ufg_depth",
]
