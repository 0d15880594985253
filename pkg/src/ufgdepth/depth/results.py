"""
Result containers for depth computations.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Tuple

from ..errors import ConfigurationError
from ..geometry import as_fraction


@dataclass(frozen=True)
class Weights:
    """
    Positive weights C_1, C_2, ... per premise cardinality; unlisted ones are 1.

    With every C_j = 1 each term of the depth is the conditional probability
    that a random premise of cardinality j has the query in its conclusion.
    """

    values: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        values = tuple(as_fraction(v) for v in self.values)
        bad = [str(v) for v in values if v <= 0]
        if bad:
            raise ConfigurationError("Weights C_j must be positive", {"weights": bad})
        object.__setattr__(self, "values", values)

    @classmethod
    def from_list(cls, values: Optional[Iterable[Any]]) -> "Weights":
        """C_1..C_k from a list (decimal strings, ints or Fractions)."""
        return cls(tuple(values or ()))

    def c(self, j: int) -> Fraction:
        return self.values[j - 1] if j <= len(self.values) else Fraction(1)

    def total(self, js: Iterable[int]) -> Fraction:
        return sum((self.c(j) for j in js), Fraction(0))


@dataclass(frozen=True)
class QueryDepth:
    """Depth of one query with its per-cardinality parts."""

    query_id: str
    element: Any
    depth: Fraction
    a: Tuple[Fraction, ...]
    terms: Tuple[Fraction, ...]
    in_sample: bool = False


@dataclass(frozen=True)
class DepthResult:
    """
    Depths of a query batch.

    depth = sum over j in J of C_j * a_j / b_j, and a term whose b_j is
    zero is exactly zero.
    """

    rows: Tuple[QueryDepth, ...]
    b: Tuple[Fraction, ...]
    J: FrozenSet[int]
    weights: Weights
    warnings: Tuple[str, ...] = ()
    _by_id: Dict[str, QueryDepth] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_by_id", {row.query_id: row for row in self.rows})

    @property
    def j_max(self) -> int:
        return len(self.b)

    @property
    def depths(self) -> List[Fraction]:
        return [row.depth for row in self.rows]

    def depth_of(self, query_id: str) -> Fraction:
        return self._by_id[query_id].depth

    def as_dict(self) -> Dict[str, Fraction]:
        return {row.query_id: row.depth for row in self.rows}

    @property
    def maximum(self) -> Optional[Fraction]:
        return max(self.depths, default=None)

    @property
    def minimum(self) -> Optional[Fraction]:
        return min(self.depths, default=None)

    @property
    def medians(self) -> List[str]:
        """Ids of all queries attaining the maximal depth (ties kept)."""
        top = self.maximum
        return [row.query_id for row in self.rows if row.depth == top]

    @property
    def minimizers(self) -> List[str]:
        low = self.minimum
        return [row.query_id for row in self.rows if row.depth == low]

    @property
    def distinct_values(self) -> int:
        return len(set(self.depths))
