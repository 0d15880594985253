"""
Closure descriptors for the supported scaling families and their products.

Each descriptor knows its ground space well enough to validate elements,
compute closures symbolically and decide, for a finite set of elements,
whether the closure escapes the union of the closures of chosen omit-one
subsets. That last test is the building block of every premise check.
"""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Collection, Dict, FrozenSet, Hashable, List, Optional, Sequence, Tuple

from ..context import (
    DEFAULT_ENUMERATE_LIMIT,
    DEFAULT_VC_LIMIT,
    FormalContext,
    closure_mask,
    enumerate_extent_masks,
    vc_dimension,
)
from ..errors import ConfigurationError, InputError, ResourceLimitError
from ..geometry import Point2, as_fraction, convex_hull, covers_hull, interval_cover
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

logger = logging.getLogger(__name__)

GROUND_MODES = ("catalog", "sample")


def _without(values: Sequence, index: int) -> List:
    return [v for k, v in enumerate(values) if k != index]


class ClosureDescriptor(ABC):
    """Symbolic closure operator on a (possibly infinite) ground space."""

    kind: str = "abstract"

    @abstractmethod
    def validate(self, element: Any) -> Any:
        """Return the element in canonical form or raise InputError."""

    @abstractmethod
    def close(self, elements: Sequence) -> ClosedSet:
        """Closure of a nonempty finite set of validated elements."""

    @abstractmethod
    def premise_bound(self, cap: Optional[int] = None) -> int:
        """Upper bound on the cardinality of any premise."""

    @abstractmethod
    def escapes(self, values: Sequence, removed: Collection[int]) -> bool:
        """
        Whether close(values) has a point outside close(values without i) for all i in removed.

        `values` lists one entry per distinct object (entries may repeat when
        distinct objects share this coordinate); `removed` holds positions.
        """

    def singleton_exceeds(self, element: Any) -> bool:
        """Whether the closure of {element} holds a second object."""
        return False

    def object_key(self, obs_id: str, element: Any) -> Hashable:
        """Identity of the object an observation stands for."""
        return element


@dataclass(frozen=True)
class FiniteContextClosure(ClosureDescriptor):
    """Closure Phi(Psi(.)) of a finite formal context; elements are object ids."""

    context: FormalContext
    premise_cap: Optional[int] = None
    enumerate_limit: int = DEFAULT_ENUMERATE_LIMIT
    vc_limit: int = DEFAULT_VC_LIMIT
    kind = "finite"

    def validate(self, element: Any) -> str:
        element = str(element)
        self.context.object_position(element)
        return element

    def close(self, elements: Sequence) -> ObjectSet:
        return ObjectSet(self.context.objects_of(self.closure_of(elements)))

    def closure_of(self, elements: Sequence) -> int:
        """Closure as an object bitmask; the empty input is allowed."""
        return closure_mask(self.context, self.context.object_mask(elements))

    def premise_bound(self, cap: Optional[int] = None) -> int:
        cap = cap if cap is not None else self.premise_cap
        try:
            return _finite_vc_bound(self.context, self.enumerate_limit, self.vc_limit)
        except ResourceLimitError as e:
            if cap is None:
                raise ConfigurationError(
                    "Context too large for the VC bound; supply a premise cap (j-max)",
                    {"objects": self.context.n_objects, "cause": e.details},
                ) from e
            logger.warning("Using user premise cap instead of the VC bound", extra={"cap": cap})
            return cap

    def singleton_exceeds(self, element: Any) -> bool:
        bit = 1 << self.context.object_position(element)
        return closure_mask(self.context, bit) != bit

    def escapes(self, values: Sequence, removed: Collection[int]) -> bool:
        return self.escape_mask(values, removed) != 0

    def escape_mask(self, values: Sequence, removed: Collection[int]) -> int:
        """Objects of the closure lying outside every omit-one closure."""
        target = self.closure_of(values)
        for i in removed:
            target &= ~self.closure_of(_without(values, i))
            if not target:
                break
        return target


@lru_cache(maxsize=64)
def _finite_vc_bound(ctx: FormalContext, enumerate_limit: int, vc_limit: int) -> int:
    extents = [ctx.objects_of(m) for m in enumerate_extent_masks(ctx, enumerate_limit)]
    return max(1, vc_dimension(extents, frozenset(ctx.objects), vc_limit))


@dataclass(frozen=True)
class NominalClosure(ClosureDescriptor):
    """Nominal scaling: a closure is one category or the whole category list."""

    categories: Tuple[str, ...]
    kind = "nominal"

    def __post_init__(self):
        categories = tuple(str(c) for c in self.categories)
        if not categories:
            raise InputError("Nominal category list is empty")
        if len(set(categories)) != len(categories):
            raise InputError("Nominal category list has duplicates", {"categories": list(categories)})
        object.__setattr__(self, "categories", categories)

    def validate(self, element: Any) -> str:
        if element not in self.categories:
            raise InputError(f"Unknown category: {element!r}", {"categories": list(self.categories)})
        return element

    def close(self, elements: Sequence) -> CategorySet:
        distinct = frozenset(elements)
        if not distinct:
            raise InputError("Closure of the empty set is undefined for nominal data")
        if len(distinct) == 1:
            return CategorySet(distinct)
        return CategorySet(frozenset(self.categories), full=True)

    def premise_bound(self, cap: Optional[int] = None) -> int:
        return 2

    def escapes(self, values: Sequence, removed: Collection[int]) -> bool:
        if not removed:
            return True
        if len(values) == 1:
            # closure of the empty set is everything only for a one-category list
            return len(self.categories) >= 2
        if len(set(values)) == 1:
            return False
        left = set()
        for i in removed:
            rest = set(_without(values, i))
            if len(rest) > 1:
                return False
            left |= rest
        return len(self.categories) > len(left)


@dataclass(frozen=True)
class InterordinalClosure(ClosureDescriptor):
    """Interordinal scaling of the real line: closures are closed intervals."""

    kind = "interordinal"

    def validate(self, element: Any) -> Fraction:
        return as_fraction(element)

    def close(self, elements: Sequence) -> IntervalSet:
        if not elements:
            raise InputError("Closure of the empty set is undefined for interordinal data")
        return IntervalSet(min(elements), max(elements))

    def premise_bound(self, cap: Optional[int] = None) -> int:
        return 2

    def escapes(self, values: Sequence, removed: Collection[int]) -> bool:
        pieces = []
        for i in removed:
            rest = _without(values, i)
            if rest:
                pieces.append((min(rest), max(rest)))
        return not interval_cover((min(values), max(values)), pieces)


@dataclass(frozen=True)
class Convex2DClosure(ClosureDescriptor):
    """Half-space scaling of the plane: closures are convex hulls."""

    kind = "convex2d"

    def validate(self, element: Any) -> Point2:
        if isinstance(element, Point2):
            return element
        if isinstance(element, (tuple, list)) and len(element) == 2:
            return Point2(*element)
        raise InputError(f"Expected a point, got {element!r}")

    def close(self, elements: Sequence) -> PolygonSet:
        if not elements:
            raise InputError("Closure of the empty set is undefined for spatial data")
        return PolygonSet(convex_hull(elements))

    def premise_bound(self, cap: Optional[int] = None) -> int:
        return 3

    def escapes(self, values: Sequence, removed: Collection[int]) -> bool:
        if not removed:
            return True
        if any(values.count(values[i]) > 1 for i in removed):
            return False
        if len(removed) == 1:
            (i,) = removed
            return values[i] in convex_hull(values).vertices
        return not covers_hull(set(values), {values[i] for i in removed})


@dataclass(frozen=True)
class HierPrefixClosure(ClosureDescriptor):
    """
    Hierarchical-nominal scaling over fixed-length digit codes.

    The ground space is the catalog ("catalog" mode) or the observed codes
    ("sample" mode). With duplicates allowed every ground code stands for at
    least two objects and observations are identified by their id;
    otherwise a code is a single object.
    """

    catalog: CodeCatalog
    duplicates_allowed: bool = True
    ground_mode: str = "catalog"
    sample_codes: Tuple[str, ...] = ()
    ground: Tuple[str, ...] = field(init=False, repr=False, compare=False)
    kind = "hier"

    def __post_init__(self):
        if self.ground_mode not in GROUND_MODES:
            raise ConfigurationError(
                f"Unknown ground mode {self.ground_mode!r}", {"allowed": list(GROUND_MODES)}
            )
        if self.ground_mode == "catalog":
            ground = self.catalog.codes
        else:
            missing = sorted(c for c in set(self.sample_codes) if c not in self.catalog)
            if missing:
                raise InputError("Sample codes missing from the catalog", {"codes": missing[:10]})
            ground = tuple(sorted(set(self.sample_codes)))
            if not ground:
                raise ConfigurationError("Sample ground mode needs at least one observed code")
        object.__setattr__(self, "sample_codes", tuple(sorted(set(self.sample_codes))))
        object.__setattr__(self, "ground", ground)

    @property
    def levels(self) -> int:
        return self.catalog.levels

    def validate(self, element: Any) -> str:
        code = str(element)
        if code not in self.catalog:
            raise InputError(f"Code {code!r} is not in the catalog", {"code": code})
        return code

    def object_key(self, obs_id: str, element: Any) -> Hashable:
        return obs_id if self.duplicates_allowed else element

    def close(self, elements: Sequence) -> PrefixClass:
        if not elements:
            raise InputError("Closure of the empty set is undefined for hierarchical data")
        return PrefixClass(common_prefix(elements))

    def premise_bound(self, cap: Optional[int] = None) -> int:
        return 2

    def singleton_exceeds(self, element: Any) -> bool:
        return self.duplicates_allowed

    def class_codes(self, prefix: str) -> Tuple[str, ...]:
        """Ground codes in the class of a prefix."""
        return codes_with_prefix(self.ground, prefix)

    def empty_closure_codes(self) -> Tuple[str, ...]:
        # objects carrying every prefix attribute exist only if the ground has one code
        return self.ground if len(self.ground) == 1 else ()

    def escape_codes(self, values: Sequence, removed: Collection[int]) -> FrozenSet[str]:
        """Ground codes of the closure outside every omit-one closure."""
        target = set(self.class_codes(common_prefix(values)))
        for i in removed:
            rest = _without(values, i)
            target -= set(self.class_codes(common_prefix(rest)) if rest else self.empty_closure_codes())
            if not target:
                break
        return frozenset(target)

    def escapes(self, values: Sequence, removed: Collection[int]) -> bool:
        return bool(self.escape_codes(values, removed))


@dataclass(frozen=True)
class ProductClosure(ClosureDescriptor):
    """
    Componentwise closure on a product of ground spaces.

    Elements are tuples with one entry per component. A point of the
    product closure escapes an omit-one closure as soon as one coordinate
    escapes, so escaping a family of omit-one subsets amounts to assigning
    each removed element to a coordinate that escapes all elements
    assigned to it.
    """

    components: Tuple[ClosureDescriptor, ...]
    labels: Tuple[str, ...] = ()
    kind = "product"

    def __post_init__(self):
        flat: List[ClosureDescriptor] = []
        flat_labels: List[str] = []
        labels = self.labels or tuple(c.kind for c in self.components)
        if len(labels) != len(self.components):
            raise InputError("Product labels must match its components")
        for component, label in zip(self.components, labels):
            if isinstance(component, ProductClosure):
                flat.extend(component.components)
                flat_labels.extend(component.labels)
            else:
                flat.append(component)
                flat_labels.append(label)
        if not flat:
            raise InputError("Product closure needs at least one component")
        object.__setattr__(self, "components", tuple(flat))
        object.__setattr__(self, "labels", tuple(flat_labels))

    def validate(self, element: Any) -> tuple:
        if not isinstance(element, (tuple, list)) or len(element) != len(self.components):
            raise InputError(
                f"Expected a {len(self.components)}-tuple, got {element!r}",
                {"components": len(self.components)},
            )
        return tuple(c.validate(e) for c, e in zip(self.components, element))

    def close(self, elements: Sequence) -> ProductSet:
        if not elements:
            raise InputError("Closure of the empty set is undefined for product data")
        return ProductSet(tuple(
            component.close([e[i] for e in elements]) for i, component in enumerate(self.components)
        ))

    def is_mixed(self) -> bool:
        """Spatial x nominal x interordinal, in any order."""
        kinds = sorted(c.kind for c in self.components)
        return kinds == ["convex2d", "interordinal", "nominal"]

    def premise_bound(self, cap: Optional[int] = None) -> int:
        bound = 4 if self.is_mixed() else sum(c.premise_bound(cap) for c in self.components)
        return min(bound, cap) if cap is not None else bound

    def singleton_exceeds(self, element: Any) -> bool:
        return any(c.singleton_exceeds(e) for c, e in zip(self.components, element))

    def escapes(self, values: Sequence, removed: Collection[int]) -> bool:
        return self.escape_assignment(values, removed) is not None

    def escape_assignment(self, values: Sequence, removed: Collection[int]) -> Optional[Dict[int, int]]:
        """
        Map each removed position to a coordinate, or None if no such assignment exists.

        A coordinate can take a set of positions only if its closure escapes
        all of their omit-one closures; since those sets are closed under
        taking subsets, the search grows each part one position at a time.
        """
        projections = [[v[c] for v in values] for c in range(len(self.components))]
        memo: Dict[Tuple[int, FrozenSet[int]], bool] = {}

        def escapable(c: int, part: FrozenSet[int]) -> bool:
            key = (c, part)
            if key not in memo:
                memo[key] = self.components[c].escapes(projections[c], part)
            return memo[key]

        options: Dict[int, List[int]] = {}
        for g in removed:
            options[g] = [c for c in range(len(self.components)) if escapable(c, frozenset((g,)))]
            if not options[g]:
                return None

        order = sorted(removed, key=lambda g: (len(options[g]), g))
        parts: List[FrozenSet[int]] = [frozenset() for _ in self.components]
        assignment: Dict[int, int] = {}

        def search(pos: int) -> bool:
            if pos == len(order):
                return True
            g = order[pos]
            for c in options[g]:
                grown = parts[c] | {g}
                if len(grown) > 1 and not escapable(c, grown):
                    continue
                previous, parts[c] = parts[c], grown
                assignment[g] = c
                if search(pos + 1):
                    return True
                parts[c] = previous
                del assignment[g]
            return False

        return dict(assignment) if search(0) else None
