"""
Vectorised premise counting for spatial x vegetation x elevation samples.

When no two objects share a location the premises are known in closed form:

- no single object;
- every pair;
- every triple whose locations are not collinear, and a collinear triple
  whose members can take one coordinate each: an end of the segment, the
  single highest or lowest elevation, the only vegetation class differing
  from the other two;
- a quadruple in which one member holds the only differing vegetation
  class, a second the single highest or lowest elevation, and both lie
  strictly on one side of the line through the other two.

Locations are scaled to integers, elevations replaced by their ranks and
classes by their positions, so every test runs on all sets sharing a
first object at once. Sums are kept as Python integers.
"""

import logging
import math
from itertools import chain, combinations, permutations
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..closures import ClosureDescriptor, ProductClosure
from .query_index import lcm_denominator

logger = logging.getLogger(__name__)

# coordinate differences stay below 2**30, so cross products fit in int64
COORDINATE_LIMIT = 1 << 29
INT64_SAFE = 1 << 62
MAX_CARDINALITY = 4
CHUNK_ROWS = 1 << 17


def _orient(ax, ay, bx, by, cx, cy):
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)


def _on_segment(qx, qy, ax, ay, bx, by) -> np.ndarray:
    return (
        (_orient(ax, ay, bx, by, qx, qy) == 0)
        & ((qx - ax) * (qx - bx) <= 0)
        & ((qy - ay) * (qy - by) <= 0)
    )


def _rest_table(n: int, k: int) -> Tuple[np.ndarray, np.ndarray]:
    """Sorted k-subsets of range(n), and the first row of each leading index."""
    count = math.comb(n, k)
    rows = np.fromiter(chain.from_iterable(combinations(range(n), k)), dtype=np.int64, count=count * k)
    rows = rows.reshape(count, k)
    starts = np.searchsorted(rows[:, 0], np.arange(n + 1)) if count else np.zeros(n + 1, dtype=np.int64)
    return rows, starts


class _Shapes:
    """Member locations of accepted sets, with the orientation of every triangle they span."""

    def __init__(self, x: np.ndarray, y: np.ndarray):
        self.x, self.y = x, y
        self.lo_x, self.hi_x = x.min(axis=1), x.max(axis=1)
        self.lo_y, self.hi_y = y.min(axis=1), y.max(axis=1)
        self.triangles = list(combinations(range(x.shape[1]), 3))
        self.signs = [
            np.sign(_orient(x[:, a], y[:, a], x[:, b], y[:, b], x[:, c], y[:, c]))
            for a, b, c in self.triangles
        ]

    def contains(self, qx: int, qy: int, rows: np.ndarray) -> np.ndarray:
        """Closed hull membership of one location for the given rows."""
        rows = rows[
            (self.lo_x[rows] <= qx) & (qx <= self.hi_x[rows])
            & (self.lo_y[rows] <= qy) & (qy <= self.hi_y[rows])
        ]
        x, y = self.x[rows], self.y[rows]
        if x.shape[1] == 2:
            return rows[_on_segment(qx, qy, x[:, 0], y[:, 0], x[:, 1], y[:, 1])]
        found = np.zeros(len(rows), dtype=bool)
        for (a, b, c), signs in zip(self.triangles, self.signs):
            o = signs[rows]
            ax, ay, bx, by, cx, cy = x[:, a], y[:, a], x[:, b], y[:, b], x[:, c], y[:, c]
            inside = (
                (o * np.sign(_orient(ax, ay, bx, by, qx, qy)) >= 0)
                & (o * np.sign(_orient(bx, by, cx, cy, qx, qy)) >= 0)
                & (o * np.sign(_orient(cx, cy, ax, ay, qx, qy)) >= 0)
            )
            flat = (
                _on_segment(qx, qy, ax, ay, bx, by)
                | _on_segment(qx, qy, bx, by, cx, cy)
                | _on_segment(qx, qy, ax, ay, cx, cy)
            )
            found |= np.where(o != 0, inside, flat)
        return rows[found]


class MixedCounter:
    """Integer-coded objects and queries of one mixed sample."""

    def __init__(self, x, y, level, category, queries: Tuple[np.ndarray, ...]):
        self.x, self.y, self.level, self.category = x, y, level, category
        self.qx, self.qy, self.q_level, self.q_category = queries

    @classmethod
    def build(cls, desc: ClosureDescriptor, elements: Sequence[tuple], queries: Sequence[tuple]) -> Optional["MixedCounter"]:
        """
        Encode validated objects and queries, or None when the closed form does not apply.

        It applies to the spatial x nominal x interordinal product when all
        object locations differ and the scaled coordinates fit in int64.
        """
        if not isinstance(desc, ProductClosure) or not desc.is_mixed():
            return None
        kinds = [c.kind for c in desc.components]
        s, v, e = kinds.index("convex2d"), kinds.index("nominal"), kinds.index("interordinal")
        if len({el[s] for el in elements}) != len(elements):
            logger.debug("Shared locations; mixed closed form not used")
            return None

        points = [el[s] for el in elements] + [q[s] for q in queries]
        dx = lcm_denominator([p.x for p in points])
        dy = lcm_denominator([p.y for p in points])
        xs = [int(p.x * dx) for p in points]
        ys = [int(p.y * dy) for p in points]
        if max((abs(c) for c in xs + ys), default=0) >= COORDINATE_LIMIT:
            logger.debug("Coordinates too large for int64; mixed closed form not used")
            return None

        levels = sorted({el[e] for el in elements} | {q[e] for q in queries})
        rank = {value: r for r, value in enumerate(levels)}
        position = {c: k for k, c in enumerate(desc.components[v].categories)}
        m = len(elements)

        def column(values: List[int]) -> np.ndarray:
            return np.array(values, dtype=np.int64)

        return cls(
            column(xs[:m]),
            column(ys[:m]),
            column([rank[el[e]] for el in elements]),
            column([position[el[v]] for el in elements]),
            (
                column(xs[m:]),
                column(ys[m:]),
                column([rank[q[e]] for q in queries]),
                column([position[q[v]] for q in queries]),
            ),
        )

    @property
    def n_queries(self) -> int:
        return len(self.qx)

    def count(self, weights: Sequence[int], j_max: int, progress_callback=None) -> Tuple[List[int], List[List[int]]]:
        """
        Integer b_j and a_j(q) for j = 1..j_max, as count_tuples accumulates them.

        Args:
            weights: Integer-scaled object weights
            j_max: Largest cardinality, at most four
            progress_callback: Called with (done, total) first objects
        """
        n = len(weights)
        j_max = min(j_max, MAX_CARDINALITY)
        top = max(weights, default=0)
        bound = sum(math.comb(n, j) * top ** j for j in range(1, j_max + 1))
        w = np.array(weights, dtype=np.int64 if bound < INT64_SAFE else object)

        b = [0] * j_max
        a = [[0] * self.n_queries for _ in range(j_max)]
        tables = {k: _rest_table(n, k) for k in range(1, j_max)}
        for first in range(n):
            for j in range(2, j_max + 1):
                rows, starts = tables[j - 1]
                for start in range(int(starts[first + 1]), len(rows), CHUNK_ROWS):
                    rest = rows[start:start + CHUNK_ROWS]
                    members = np.column_stack([np.full(len(rest), first, dtype=np.int64), rest])
                    members = members[self._premises(members)]
                    if not len(members):
                        continue
                    products = w[members].prod(axis=1)
                    b[j - 1] += int(products.sum())
                    self._absorb(members, products, a[j - 1])
            if progress_callback:
                progress_callback(first + 1, n)
        return b, a

    def _premises(self, members: np.ndarray) -> np.ndarray:
        j = members.shape[1]
        if j == 2:
            return np.ones(len(members), dtype=bool)
        x, y = self.x[members], self.y[members]
        level, category = self.level[members], self.category[members]
        if j == 3:
            return self._triples(x, y, level, category)
        return self._quadruples(x, y, level, category)

    @staticmethod
    def _extreme(level: np.ndarray, k: int) -> np.ndarray:
        others = np.delete(level, k, axis=1)
        return (level[:, k] < others.min(axis=1)) | (level[:, k] > others.max(axis=1))

    @staticmethod
    def _odd_class(category: np.ndarray, k: int) -> np.ndarray:
        others = np.delete(category, k, axis=1)
        same = (others == others[:, :1]).all(axis=1)
        return same & (category[:, k] != others[:, 0])

    def _triples(self, x, y, level, category) -> np.ndarray:
        collinear = _orient(x[:, 0], y[:, 0], x[:, 1], y[:, 1], x[:, 2], y[:, 2]) == 0
        if not collinear.any():
            return ~collinear
        end = []
        for k in range(3):
            p, q = [i for i in range(3) if i != k]
            between = (x[:, k] - x[:, p]) * (x[:, k] - x[:, q]) + (y[:, k] - y[:, p]) * (y[:, k] - y[:, q]) < 0
            end.append(~between)
        extreme = [self._extreme(level, k) for k in range(3)]
        odd = [self._odd_class(category, k) for k in range(3)]
        matched = np.zeros(len(x), dtype=bool)
        for s, e, v in permutations(range(3)):
            matched |= end[s] & extreme[e] & odd[v]
        return ~collinear | matched

    def _quadruples(self, x, y, level, category) -> np.ndarray:
        extreme = [self._extreme(level, k) for k in range(4)]
        odd = [self._odd_class(category, k) for k in range(4)]
        result = np.zeros(len(x), dtype=bool)
        for v in range(4):
            if not odd[v].any():
                continue
            for e in range(4):
                if e == v:
                    continue
                s1, s2 = [k for k in range(4) if k not in (v, e)]
                side_v = np.sign(_orient(x[:, s1], y[:, s1], x[:, s2], y[:, s2], x[:, v], y[:, v]))
                side_e = np.sign(_orient(x[:, s1], y[:, s1], x[:, s2], y[:, s2], x[:, e], y[:, e]))
                result |= odd[v] & extreme[e] & (side_v * side_e > 0)
        return result

    def _absorb(self, members: np.ndarray, products: np.ndarray, a: List[int]) -> None:
        level, category = self.level[members], self.category[members]
        lo, hi = level.min(axis=1), level.max(axis=1)
        single = (category == category[:, :1]).all(axis=1)
        shapes = _Shapes(self.x[members], self.y[members])
        for q in range(self.n_queries):
            candidates = (lo <= self.q_level[q]) & (self.q_level[q] <= hi)
            candidates &= ~single | (category[:, 0] == self.q_category[q])
            rows = np.nonzero(candidates)[0]
            if not len(rows):
                continue
            inside = shapes.contains(int(self.qx[q]), int(self.qy[q]), rows)
            if len(inside):
                a[q] += int(products[inside].sum())
