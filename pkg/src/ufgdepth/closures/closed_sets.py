"""
Symbolic closed sets: the values of the closure operators.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, FrozenSet, Tuple

from ..errors import InputError
from ..geometry import ConvexPoly, Point2


class ClosedSet:
    """Base class; subclasses implement closed membership."""

    def contains(self, element: Any) -> bool:
        raise NotImplementedError


@dataclass(frozen=True)
class ObjectSet(ClosedSet):
    """Explicit extent of a finite context."""

    objects: FrozenSet[str]

    def contains(self, element: Any) -> bool:
        return element in self.objects

    def __str__(self) -> str:
        return "{" + ",".join(sorted(self.objects)) + "}"


@dataclass(frozen=True)
class CategorySet(ClosedSet):
    """A single category, or the full category list when `full` is set."""

    categories: FrozenSet[str]
    full: bool = False

    def contains(self, element: Any) -> bool:
        if not isinstance(element, str):
            raise InputError(f"Expected a category label, got {element!r}")
        return element in self.categories

    def __str__(self) -> str:
        return "V" if self.full else next(iter(self.categories))


@dataclass(frozen=True)
class IntervalSet(ClosedSet):
    """Closed interval [lo, hi]."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise InputError(f"Interval bounds out of order: [{self.lo}, {self.hi}]")

    def contains(self, element: Any) -> bool:
        if not isinstance(element, (int, Fraction)) or isinstance(element, bool):
            raise InputError(f"Expected an exact rational, got {element!r}")
        return self.lo <= element <= self.hi

    def __str__(self) -> str:
        return f"[{self.lo},{self.hi}]"


@dataclass(frozen=True)
class PolygonSet(ClosedSet):
    """Convex hull of finitely many points (possibly a segment or a point)."""

    polygon: ConvexPoly

    def contains(self, element: Any) -> bool:
        if not isinstance(element, Point2):
            raise InputError(f"Expected a point, got {element!r}")
        return self.polygon.contains(element)

    def __str__(self) -> str:
        return str(self.polygon)


@dataclass(frozen=True)
class PrefixClass(ClosedSet):
    """All codes starting with the prefix; the empty prefix is the whole space."""

    prefix: str

    def contains(self, element: Any) -> bool:
        if not isinstance(element, str):
            raise InputError(f"Expected a code, got {element!r}")
        return element.startswith(self.prefix)

    def __str__(self) -> str:
        return self.prefix or "*"


@dataclass(frozen=True)
class ProductSet(ClosedSet):
    """Cartesian product of per-coordinate closed sets."""

    components: Tuple[ClosedSet, ...]

    def contains(self, element: Any) -> bool:
        if not isinstance(element, tuple) or len(element) != len(self.components):
            raise InputError(
                f"Expected a {len(self.components)}-tuple, got {element!r}",
                {"components": len(self.components)},
            )
        return all(c.contains(e) for c, e in zip(self.components, element))

    def __str__(self) -> str:
        return " x ".join(str(c) for c in self.components)
