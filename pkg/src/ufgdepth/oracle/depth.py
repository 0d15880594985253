"""
Straight enumeration of the empirical depth over index combinations.
"""

from fractions import Fraction
from itertools import combinations
from typing import Any, List, Optional, Sequence, Union

from ..closures import (
    Convex2DClosure,
    HierPrefixClosure,
    InterordinalClosure,
    NominalClosure,
    ProductClosure,
)
from ..depth.results import DepthResult, QueryDepth, Weights
from ..depth.ufg import NO_PREMISES
from ..errors import ConfigurationError, ResourceLimitError
from ..sample import Sample
from .config import OracleConfig
from .premises import build_components, premise_of_components

MAX_OBSERVATIONS = 40

_DEFAULT_J_MAX = {
    Convex2DClosure: 3,
    InterordinalClosure: 2,
    NominalClosure: 2,
    HierPrefixClosure: 2,
}


def _default_j_max(target: Any) -> int:
    if type(target) in _DEFAULT_J_MAX:
        return _DEFAULT_J_MAX[type(target)]
    if isinstance(target, ProductClosure) and sorted(c.kind for c in target.components) == ["convex2d", "interordinal", "nominal"]:
        return 4
    raise ConfigurationError("depth_oracle needs an explicit j_max for this target")


def _holds(target: Any, components, query: Any) -> bool:
    if isinstance(target, ProductClosure):
        return all(c.holds(q) for c, q in zip(components, query))
    return components[0].holds(query)


def depth_oracle(
    sample: Sample,
    queries: Sequence[Any],
    target: Any,
    weights: Union[Weights, Sequence[Any], None] = None,
    j_max: Optional[int] = None,
    cfg: Optional[OracleConfig] = None,
    query_ids: Optional[Sequence[str]] = None,
) -> DepthResult:
    """
    Depth of each query by enumerating every combination of observations.

    A combination whose objects are not pairwise distinct is skipped; the
    rest are tested with premise_oracle and weighted by the product of
    their observation weights. Query ids default to 1..len(queries).

    Raises:
        ResourceLimitError: More than 40 observations
    """
    cfg = cfg or OracleConfig()
    observations = list(sample)
    if len(observations) > MAX_OBSERVATIONS:
        raise ResourceLimitError(
            f"depth_oracle is limited to {MAX_OBSERVATIONS} observations",
            {"limit": MAX_OBSERVATIONS, "observations": len(observations)},
        )
    j_max = j_max or _default_j_max(target)
    w = weights if isinstance(weights, Weights) else Weights.from_list(weights)
    query_ids = list(query_ids) if query_ids is not None else [str(i + 1) for i in range(len(queries))]
    by_id = isinstance(target, HierPrefixClosure) and target.duplicates_allowed

    b: List[Fraction] = [Fraction(0)] * j_max
    a: List[List[Fraction]] = [[Fraction(0)] * len(queries) for _ in range(j_max)]
    for j in range(1, j_max + 1):
        for combo in combinations(observations, j):
            keys = {o.obs_id if by_id else _hashable(o.element) for o in combo}
            if len(keys) < j:
                continue
            elements = [_hashable(o.element) for o in combo]
            components, _ = build_components(target, elements)
            if not premise_of_components(components, j, cfg):
                continue
            weight = Fraction(1)
            for o in combo:
                weight *= Fraction(o.weight)
            b[j - 1] += weight
            for q, query in enumerate(queries):
                if _holds(target, components, _hashable(query)):
                    a[j - 1][q] += weight

    J = frozenset(j for j in range(1, j_max + 1) if b[j - 1] > 0)
    observed = {_hashable(o.element) for o in observations}
    rows = []
    for q, (qid, query) in enumerate(zip(query_ids, queries)):
        terms = tuple(
            w.c(j) * a[j - 1][q] / b[j - 1] if j in J else Fraction(0)
            for j in range(1, j_max + 1)
        )
        rows.append(QueryDepth(
            qid,
            query,
            sum(terms, Fraction(0)),
            tuple(a[j - 1][q] for j in range(1, j_max + 1)),
            terms,
            _hashable(query) in observed,
        ))
    return DepthResult(tuple(rows), tuple(b), J, w, () if J else (NO_PREMISES,))


def _hashable(element: Any) -> Any:
    return tuple(element) if isinstance(element, list) else element
