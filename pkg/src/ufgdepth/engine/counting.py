"""
Weighted enumeration of j-subsets of a sample.

For every j up to j_max, b_j is the total weight of the j-sets of distinct
sample objects that are premises, and a_j(q) the part of it whose closure
contains query q. The weight of a set is the product of its objects'
weights, so enumerating distinct objects with summed multiplicity weights
equals enumerating index combinations of the observations.

Weights are rescaled to integers with one common denominator, which makes
every partial sum exact and independent of summation order; the work is
split by the first object of each set and can run in worker processes.
"""

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Any, Callable, Dict, Hashable, List, Optional, Sequence, Tuple

import numpy as np

from ..closures import ClosedSet, ClosureDescriptor, max_premise_bound
from ..errors import ConfigurationError, ResourceLimitError
from ..sample import Sample, aggregate_objects
from .mixed_counts import MixedCounter
from .premises import is_premise
from .query_index import QueryIndex

logger = logging.getLogger(__name__)

DEFAULT_MAX_N = 300

ProgressCallback = Callable[[int, int], None]


@dataclass(frozen=True)
class TupleCounts:
    """
    Per-cardinality premise weights.

    b[j-1] is b_j and a[j-1][q] is a_j of the q-th query, both exact.
    """

    j_max: int
    b: Tuple[Fraction, ...]
    a: Tuple[Tuple[Fraction, ...], ...]
    n_objects: int

    def b_j(self, j: int) -> Fraction:
        return self.b[j - 1]

    def a_j(self, j: int, q: int) -> Fraction:
        return self.a[j - 1][q]

    @property
    def n_queries(self) -> int:
        return len(self.a[0]) if self.a else 0


class PremiseCache:
    """Premise verdicts and closures keyed by the sorted distinct-object set."""

    def __init__(self):
        self._entries: Dict[Tuple[Hashable, ...], Optional[ClosedSet]] = {}
        self.hits = 0
        self.misses = 0

    def closure_if_premise(self, desc: ClosureDescriptor, keys: Sequence[Hashable], values: Sequence[Any]) -> Optional[ClosedSet]:
        """The closure of a premise, or None when the set is not one."""
        key = tuple(sorted(keys, key=repr))
        if key in self._entries:
            self.hits += 1
            return self._entries[key]
        self.misses += 1
        verdict = is_premise(desc, values)
        closed = desc.close(values) if verdict.is_premise else None
        self._entries[key] = closed
        return closed


def resolve_j_max(desc: ClosureDescriptor, j_max: Optional[int], cap: Optional[int] = None) -> int:
    """Validate a requested j_max against the descriptor's premise bound."""
    bound = max_premise_bound(desc, cap if cap is not None else j_max)
    if j_max is None:
        return bound
    if j_max < 1 or j_max > bound:
        raise ConfigurationError(
            f"j_max must lie between 1 and the premise bound {bound}, got {j_max}",
            {"j_max": j_max, "bound": bound},
        )
    return j_max


def count_tuples(
    sample: Sample,
    queries: Sequence[Any],
    desc: ClosureDescriptor,
    j_max: Optional[int] = None,
    workers: int = 1,
    max_n: int = DEFAULT_MAX_N,
    cap: Optional[int] = None,
    progress_callback: Optional[ProgressCallback] = None,
    cache: Optional[PremiseCache] = None,
    fast: bool = True,
) -> TupleCounts:
    """
    Count weighted premise j-sets of the sample for j = 1..j_max.

    Args:
        sample: Nonempty weighted sample
        queries: Elements of the descriptor's ground space
        desc: Closure descriptor
        j_max: Largest cardinality (defaults to the premise bound)
        workers: Worker processes; 1 runs in-process
        max_n: Largest number of distinct objects accepted when j_max >= 4
        cap: Premise cap used when the bound cannot be computed
        progress_callback: Called with (done, total) first-object blocks
        cache: Verdict cache reused across calls (in-process runs only)
        fast: Count mixed samples with distinct locations in closed form

    Returns:
        TupleCounts; identical for every worker count

    Raises:
        ConfigurationError: If j_max exceeds the premise bound
        ResourceLimitError: If j_max >= 4 and the sample has more than max_n objects
    """
    sample = sample.validated(desc)
    queries = [desc.validate(q) for q in queries]
    j_max = resolve_j_max(desc, j_max, cap)

    objects = aggregate_objects(sample, desc)
    n = len(objects)
    if j_max >= 4 and n > max_n:
        raise ResourceLimitError(
            f"At most {max_n} distinct objects are supported for j_max={j_max}, got {n}",
            {"limit": max_n, "objects": n, "j_max": j_max},
        )

    denominator = 1
    for obj in objects:
        denominator = math.lcm(denominator, obj.weight.denominator)
    int_weights = [int(obj.weight * denominator) for obj in objects]

    logger.info(
        "Counting premise sets",
        extra={"objects": n, "observations": len(sample), "queries": len(queries), "j_max": j_max, "workers": workers},
    )

    payload = (desc, [o.key for o in objects], [o.element for o in objects], int_weights, queries, j_max)
    firsts = list(range(n))
    b_int = [0] * j_max
    a_int = [np.zeros(len(queries), dtype=object) for _ in range(j_max)]

    def absorb(part):
        part_b, part_a = part
        for j in range(j_max):
            b_int[j] += part_b[j]
            a_int[j] += np.asarray(part_a[j], dtype=object)

    counter = MixedCounter.build(desc, [o.element for o in objects], queries) if fast else None
    if counter is not None:
        logger.debug("Counting mixed premise sets in closed form", extra={"objects": n})
        b_int, a_rows = counter.count(int_weights, j_max, progress_callback)
        a_int = [np.array(row, dtype=object) for row in a_rows]
    elif workers <= 1 or n < 2:
        state = _CountState(payload, cache or PremiseCache())
        for done, first in enumerate(firsts, start=1):
            absorb(state.count_from(first))
            if progress_callback:
                progress_callback(done, n)
        logger.debug("Premise cache", extra={"hits": state.cache.hits, "misses": state.cache.misses})
    else:
        chunks = [firsts[k::workers * 4] for k in range(min(n, workers * 4))]
        with ProcessPoolExecutor(max_workers=workers, initializer=_init_worker, initargs=(payload,)) as pool:
            done = 0
            for part, chunk in zip(pool.map(_count_chunk, chunks), chunks):
                absorb(part)
                done += len(chunk)
                if progress_callback:
                    progress_callback(done, n)

    b = tuple(Fraction(b_int[j], denominator ** (j + 1)) for j in range(j_max))
    a = tuple(
        tuple(Fraction(int(v), denominator ** (j + 1)) for v in a_int[j])
        for j in range(j_max)
    )
    for j in range(j_max):
        logger.debug("Premise weight", extra={"j": j + 1, "b_j": str(b[j])})
    return TupleCounts(j_max=j_max, b=b, a=a, n_objects=n)


class _CountState:
    def __init__(self, payload, cache: PremiseCache):
        desc, keys, elements, weights, queries, j_max = payload
        self.desc = desc
        self.keys = keys
        self.elements = elements
        self.weights = weights
        self.j_max = j_max
        self.n_queries = len(queries)
        self.index = QueryIndex(desc, queries)
        self.cache = cache

    def count_from(self, first: int) -> Tuple[List[int], List[np.ndarray]]:
        """Sets whose smallest object position is `first`."""
        b = [0] * self.j_max
        a = [np.zeros(self.n_queries, dtype=object) for _ in range(self.j_max)]
        n = len(self.elements)
        for j in range(1, self.j_max + 1):
            for rest in combinations(range(first + 1, n), j - 1):
                members = (first,) + rest
                closed = self.cache.closure_if_premise(
                    self.desc,
                    [self.keys[i] for i in members],
                    [self.elements[i] for i in members],
                )
                if closed is None:
                    continue
                weight = 1
                for i in members:
                    weight *= self.weights[i]
                b[j - 1] += weight
                mask = self.index.mask(closed)
                if mask.any():
                    a[j - 1][mask] += weight
        return b, a


_worker_state: Optional[_CountState] = None


def _init_worker(payload) -> None:
    global _worker_state
    _worker_state = _CountState(payload, PremiseCache())


def _count_chunk(firsts: List[int]) -> Tuple[List[int], List[list]]:
    state = _worker_state
    b = [0] * state.j_max
    a = [[0] * state.n_queries for _ in range(state.j_max)]
    for first in firsts:
        part_b, part_a = state.count_from(first)
        for j in range(state.j_max):
            b[j] += part_b[j]
            a[j] = [x + int(y) for x, y in zip(a[j], part_a[j])]
    return b, a
