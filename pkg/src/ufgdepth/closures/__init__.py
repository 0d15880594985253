"""Closure operators for the supported scaling families."""

from .catalog import CodeCatalog, codes_with_prefix, common_prefix
from .closed_sets import (
    CategorySet,
    ClosedSet,
    IntervalSet,
    ObjectSet,
    PolygonSet,
    PrefixClass,
    ProductSet,
)
from .descriptors import (
    GROUND_MODES,
    ClosureDescriptor,
    Convex2DClosure,
    FiniteContextClosure,
    HierPrefixClosure,
    InterordinalClosure,
    NominalClosure,
    ProductClosure,
)
from .operators import close, contains, max_premise_bound

__all__ = [
    "CategorySet",
    "ClosedSet",
    "ClosureDescriptor",
    "CodeCatalog",
    "Convex2DClosure",
    "FiniteContextClosure",
    "GROUND_MODES",
    "HierPrefixClosure",
    "InterordinalClosure",
    "IntervalSet",
    "NominalClosure",
    "ObjectSet",
    "PolygonSet",
    "PrefixClass",
    "ProductClosure",
    "ProductSet",
    "close",
    "codes_with_prefix",
    "common_prefix",
    "contains",
    "max_premise_bound",
]
