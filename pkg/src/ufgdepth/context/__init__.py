"""Finite formal contexts and their derivation operators."""

from .formal_context import FormalContext
from .operations import (
    DEFAULT_ENUMERATE_LIMIT,
    DEFAULT_VC_LIMIT,
    Implication,
    closure,
    closure_mask,
    derive_extent,
    derive_intent,
    enumerate_extent_masks,
    enumerate_extents,
    extent_mask,
    intent_mask,
    respects,
    vc_dimension,
)

__all__ = [
    "FormalContext",
    "Implication",
    "DEFAULT_ENUMERATE_LIMIT",
    "DEFAULT_VC_LIMIT",
    "closure",
    "closure_mask",
    "derive_extent",
    "derive_intent",
    "enumerate_extent_masks",
    "enumerate_extents",
    "extent_mask",
    "intent_mask",
    "respects",
    "vc_dimension",
]
