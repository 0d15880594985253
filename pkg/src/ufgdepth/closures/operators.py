"""
Module-level entry points over closure descriptors.
"""

from typing import Any, Iterable, Optional

from ..errors import InputError
from .closed_sets import ClosedSet
from .descriptors import ClosureDescriptor, FiniteContextClosure


def close(desc: ClosureDescriptor, elements: Iterable[Any]) -> ClosedSet:
    """
    Closure of a finite set of elements.

    Args:
        desc: Closure descriptor
        elements: Elements of the descriptor's ground space

    Returns:
        Symbolic closed set

    Raises:
        InputError: If an element is outside the ground space, or the set is
            empty for a descriptor other than a finite context
    """
    validated = [desc.validate(e) for e in elements]
    if not validated and not isinstance(desc, FiniteContextClosure):
        raise InputError("Closure needs a nonempty set of elements", {"descriptor": desc.kind})
    return desc.close(validated)


def contains(closed: ClosedSet, element: Any) -> bool:
    """Closed membership; raises InputError on dimension mismatch."""
    return closed.contains(element)


def max_premise_bound(desc: ClosureDescriptor, cap: Optional[int] = None) -> int:
    """
    Largest possible premise cardinality for the descriptor.

    Spatial 3, interordinal, nominal and hierarchical 2, a finite context its
    VC dimension (or the cap when that is infeasible), a product the sum of
    its components capped by `cap`, and spatial x nominal x interordinal 4.
    """
    return desc.premise_bound(cap)
