"""
Definitional premise check.

(C1) asks for an element of the closure outside A; (C2) asks that the
closure is not covered by the closures of a family of proper subsets. In
"maximal-only" mode the family is {A - {a}}; in "all-families" mode every
family of proper subsets is tried and the check passes only if none covers.

Infinite ground spaces are replaced by finite witness candidates on which
every closure involved is decided exactly. Product closures are handled
point by point: a candidate tuple lies in the closure of a subset iff each
coordinate does.
"""

import logging
from itertools import combinations, product
from typing import Any, Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from ..closures import (
    ClosureDescriptor,
    Convex2DClosure,
    FiniteContextClosure,
    HierPrefixClosure,
    InterordinalClosure,
    NominalClosure,
    ProductClosure,
)
from ..context import FormalContext
from ..errors import InputError, ResourceLimitError, UnsupportedOperationError
from .candidates import line_candidates, plane_candidates
from .config import ALL_FAMILIES, OracleConfig
from .hull import homogeneous, in_hull, same

logger = logging.getLogger(__name__)

MAX_ALL_FAMILIES = 4
MAX_CATALOG = 10_000

Subset = Tuple[int, ...]


class _PlaneComponent:
    def __init__(self, values: Sequence[Any]):
        self.points = [homogeneous(p.x, p.y) for p in values]
        raw = plane_candidates([(p.x, p.y) for p in values])
        self.candidates = [h for h in (homogeneous(x, y) for x, y in raw) if in_hull(h, self.points)]

    def member(self, candidate, subset: Subset) -> bool:
        return bool(subset) and in_hull(candidate, [self.points[i] for i in subset])

    def is_value(self, candidate) -> bool:
        return any(same(candidate, p) for p in self.points)

    def holds(self, value: Any) -> bool:
        return in_hull(homogeneous(value.x, value.y), self.points)


class _LineComponent:
    def __init__(self, values: Sequence[Any]):
        self.values = list(values)
        self.candidates = line_candidates(values)

    def member(self, candidate, subset: Subset) -> bool:
        if not subset:
            return False
        chosen = [self.values[i] for i in subset]
        return min(chosen) <= candidate <= max(chosen)

    def is_value(self, candidate) -> bool:
        return candidate in self.values

    def holds(self, value: Any) -> bool:
        return min(self.values) <= value <= max(self.values)


class _CategoryComponent:
    def __init__(self, values: Sequence[str], categories: Sequence[str]):
        self.values = list(values)
        self.categories = list(categories)
        present = sorted(set(values))
        others = [c for c in self.categories if c not in present]
        self.candidates = present if len(present) == 1 else present + others[:1]

    def _closure(self, subset: Subset) -> FrozenSet[str]:
        chosen = {self.values[i] for i in subset}
        if not chosen:
            return frozenset(self.categories) if len(self.categories) == 1 else frozenset()
        if len(chosen) == 1:
            return frozenset(chosen)
        return frozenset(self.categories)

    def member(self, candidate, subset: Subset) -> bool:
        return candidate in self._closure(subset)

    def is_value(self, candidate) -> bool:
        return candidate in self.values

    def holds(self, value: Any) -> bool:
        return value in self._closure(tuple(range(len(self.values))))


class _ObjectComponent:
    """Explicit objects with attribute sets; closures are Phi(Psi(.)) by direct scans."""

    def __init__(self, rows: Sequence[FrozenSet], universe: FrozenSet, values: Sequence[int], lookup=None):
        self.rows = list(rows)
        self.lookup = lookup
        self.universe = universe
        self.values = list(values)
        self._cache: Dict[Subset, FrozenSet[int]] = {}
        self.candidates = sorted(self._closure(tuple(range(len(self.values)))))

    def _intent(self, subset: Subset) -> FrozenSet:
        shared = self.universe
        for i in subset:
            shared = shared & self.rows[self.values[i]]
        return shared

    def _closure(self, subset: Subset) -> FrozenSet[int]:
        if subset not in self._cache:
            intent = self._intent(subset)
            self._cache[subset] = frozenset(o for o, row in enumerate(self.rows) if intent <= row)
        return self._cache[subset]

    def member(self, candidate, subset: Subset) -> bool:
        return candidate in self._closure(subset)

    def is_value(self, candidate) -> bool:
        return candidate in self.values

    def holds(self, value: Any) -> bool:
        """Whether an element with the attributes lookup(value) lies in the closure of all values."""
        return self._intent(tuple(range(len(self.values)))) <= self.lookup(value)


def _row_lookup(ctx: FormalContext, rows: Sequence[FrozenSet[int]]):
    return lambda element: rows[ctx.object_position(element)]


def context_rows(ctx: FormalContext) -> Tuple[List[FrozenSet[int]], FrozenSet[int]]:
    """Attribute positions of every object, read straight off the incidence matrix."""
    rows = [frozenset(int(j) for j in np.flatnonzero(ctx.incidence[i])) for i in range(ctx.n_objects)]
    return rows, frozenset(range(ctx.n_attributes))


class HierModel:
    """Explicit objects of a hierarchical ground space with their prefix attributes."""

    def __init__(self, desc: HierPrefixClosure, copies: int = 2):
        ground = desc.catalog.codes if desc.ground_mode == "catalog" else desc.sample_codes
        if len(ground) > MAX_CATALOG:
            raise ResourceLimitError(
                f"Hierarchical oracle limited to {MAX_CATALOG} ground codes",
                {"limit": MAX_CATALOG, "codes": len(ground)},
            )
        self.copies = copies if desc.duplicates_allowed else 1
        self.codes: List[str] = []
        self.rows: List[FrozenSet[str]] = []
        self.first: Dict[str, int] = {}
        for code in ground:
            self.first[code] = len(self.codes)
            for _ in range(self.copies):
                self.codes.append(code)
                self.rows.append(self.prefixes(code))
        self.universe = frozenset().union(*self.rows)

    @staticmethod
    def prefixes(code: str) -> FrozenSet[str]:
        return frozenset(code[:k] for k in range(1, len(code) + 1))

    def objects_for(self, codes: Sequence[str]) -> List[int]:
        """Distinct model objects for a list of codes (repeats take further copies)."""
        used: Dict[str, int] = {}
        out = []
        for code in codes:
            if code not in self.first:
                raise InputError(f"Code {code!r} is not in the ground space", {"code": code})
            k = used.get(code, 0)
            if k >= self.copies:
                raise InputError(f"Code {code!r} repeated more often than its objects", {"code": code})
            used[code] = k + 1
            out.append(self.first[code] + k)
        return out


def build_components(target: Any, elements: Sequence[Any]):
    """One evaluator per coordinate of the target, over the given distinct elements."""
    if isinstance(target, FormalContext):
        target = FiniteContextClosure(target)
    if isinstance(target, FiniteContextClosure):
        ctx = target.context
        rows, universe = context_rows(ctx)
        return [_ObjectComponent(rows, universe, [ctx.object_position(e) for e in elements], _row_lookup(ctx, rows))], False
    if isinstance(target, HierPrefixClosure):
        repeats = max((list(elements).count(c) for c in set(elements)), default=1)
        model = HierModel(target, copies=max(2, repeats))
        return [_ObjectComponent(model.rows, model.universe, model.objects_for(elements), HierModel.prefixes)], False
    if isinstance(target, ProductClosure):
        parts = []
        for i, component in enumerate(target.components):
            parts.append(_component(component, [e[i] for e in elements]))
        return parts, True
    return [_component(target, list(elements))], False


def _component(desc: ClosureDescriptor, values: Sequence[Any]):
    if isinstance(desc, Convex2DClosure):
        return _PlaneComponent(values)
    if isinstance(desc, InterordinalClosure):
        return _LineComponent(values)
    if isinstance(desc, NominalClosure):
        return _CategoryComponent(values, desc.categories)
    if isinstance(desc, FiniteContextClosure):
        rows, universe = context_rows(desc.context)
        return _ObjectComponent(
            rows, universe, [desc.context.object_position(v) for v in values], _row_lookup(desc.context, rows)
        )
    raise UnsupportedOperationError(f"No oracle for {desc.kind} components", {"descriptor": desc.kind})


def premise_oracle(target: Any, elements: Sequence[Any], cfg: Optional[OracleConfig] = None) -> bool:
    """
    Literal (C1) + (C2) check.

    Args:
        target: FormalContext or a closure descriptor
        elements: One entry per distinct object (hierarchical codes may repeat)
        cfg: Oracle settings; the mode selects the subset families

    Raises:
        ResourceLimitError: All-families mode with more than four elements
    """
    cfg = cfg or OracleConfig()
    elements = list(elements)
    if not elements:
        raise InputError("Premise check needs a nonempty set")
    components, _ = build_components(target, elements)
    return premise_of_components(components, len(elements), cfg)


def premise_of_components(components, n: int, cfg: OracleConfig) -> bool:
    """(C1) + (C2) on evaluators already built for the n elements."""
    if not _condition_one(components, n):
        return False

    if cfg.mode == ALL_FAMILIES:
        if n > MAX_ALL_FAMILIES:
            raise ResourceLimitError(
                f"All-families mode is limited to {MAX_ALL_FAMILIES} elements",
                {"limit": MAX_ALL_FAMILIES, "elements": n},
            )
        subsets = [s for k in range(n) for s in combinations(range(n), k)]
    else:
        subsets = [tuple(i for i in range(n) if i != g) for g in range(n)]

    joint = _joint_masks(components, subsets)
    if cfg.mode != ALL_FAMILIES:
        return 0 in joint

    families = np.arange(1 << len(subsets), dtype=np.int64)
    masks = np.array(sorted(joint), dtype=np.int64)
    covered = np.all((families[:, None] & masks[None, :]) != 0, axis=1)
    return not covered.any()


def _condition_one(components, n: int) -> bool:
    if any(any(not c.is_value(x) for x in c.candidates) for c in components):
        return True
    size = 1
    for c in components:
        size *= len(c.candidates)
    return size > n


def _joint_masks(components, subsets: Sequence[Subset]) -> set:
    """Distinct masks, over the subsets, of the subsets whose closure holds a candidate tuple."""
    per_component = []
    for c in components:
        masks = set()
        for x in c.candidates:
            mask = 0
            for k, subset in enumerate(subsets):
                if c.member(x, subset):
                    mask |= 1 << k
            masks.add(mask)
        per_component.append(masks)
    joint = set()
    for combo in product(*per_component):
        mask = (1 << len(subsets)) - 1
        for m in combo:
            mask &= m
        joint.add(mask)
    return joint
