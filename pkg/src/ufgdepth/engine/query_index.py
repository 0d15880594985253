"""
Vectorised closed membership of a fixed batch of query elements.

Rational coordinates are scaled to integers with one common denominator per
column; half-plane and interval tests then become integer comparisons. The
arrays are int64 when every product stays well inside its range and Python
integers (object dtype) otherwise, so results are always exact.
"""

import math
from fractions import Fraction
from typing import Any, List, Sequence

import numpy as np

from ..closures import (
    CategorySet,
    ClosedSet,
    ClosureDescriptor,
    Convex2DClosure,
    IntervalSet,
    ObjectSet,
    PolygonSet,
    PrefixClass,
    ProductClosure,
    ProductSet,
)
from ..geometry import half_planes

INT64_SAFE = 1 << 62


def lcm_denominator(values: Sequence[Fraction]) -> int:
    d = 1
    for v in values:
        d = math.lcm(d, v.denominator)
    return d


def _int_array(values: List[int], scale_bound: int = 1) -> np.ndarray:
    """int64 when |value| * scale_bound cannot overflow, else object dtype."""
    top = max((abs(v) for v in values), default=0)
    if top * max(scale_bound, 1) < INT64_SAFE >> 2:
        return np.array(values, dtype=np.int64)
    return np.array(values, dtype=object)


class _PointColumn:
    def __init__(self, points: Sequence[Any]):
        self.dx = lcm_denominator([p.x for p in points])
        self.dy = lcm_denominator([p.y for p in points])
        self.xs = [int(p.x * self.dx) for p in points]
        self.ys = [int(p.y * self.dy) for p in points]
        self.top = max([abs(v) for v in self.xs + self.ys], default=0)
        self.x_arr = np.array(self.xs, dtype=object)
        self.y_arr = np.array(self.ys, dtype=object)
        self.x64 = self.y64 = None
        if self.top < 1 << 30:
            self.x64 = np.array(self.xs, dtype=np.int64)
            self.y64 = np.array(self.ys, dtype=np.int64)

    def mask(self, closed: ClosedSet) -> np.ndarray:
        if not isinstance(closed, PolygonSet):
            raise _mismatch(closed)
        result = np.ones(len(self.xs), dtype=bool)
        for plane in half_planes(closed.polygon):
            a, b = plane.a / self.dx, plane.b / self.dy
            scale = math.lcm(a.denominator, b.denominator, plane.c.denominator)
            ia, ib, ic = int(a * scale), int(b * scale), int(plane.c * scale)
            big = max(abs(ia), abs(ib))
            if self.x64 is not None and big < 1 << 30 and abs(ic) < 1 << 61:
                result &= ia * self.x64 + ib * self.y64 >= ic
            else:
                result &= (ia * self.x_arr + ib * self.y_arr >= ic).astype(bool)
            if not result.any():
                break
        return result


class _RationalColumn:
    def __init__(self, values: Sequence[Fraction]):
        self.d = lcm_denominator(values)
        ints = [int(v * self.d) for v in values]
        self.arr = _int_array(ints)

    def mask(self, closed: ClosedSet) -> np.ndarray:
        if not isinstance(closed, IntervalSet):
            raise _mismatch(closed)
        lo = math.ceil(closed.lo * self.d)
        hi = math.floor(closed.hi * self.d)
        if self.arr.dtype == object or max(abs(lo), abs(hi)) >= INT64_SAFE:
            return np.array([lo <= v <= hi for v in self.arr], dtype=bool)
        return (self.arr >= lo) & (self.arr <= hi)


class _LabelColumn:
    def __init__(self, labels: Sequence[str]):
        self.arr = np.array(list(labels), dtype=str) if labels else np.array([], dtype=str)

    def mask(self, closed: ClosedSet) -> np.ndarray:
        n = len(self.arr)
        if isinstance(closed, CategorySet):
            if closed.full:
                return np.ones(n, dtype=bool)
            return np.isin(self.arr, list(closed.categories))
        if isinstance(closed, ObjectSet):
            return np.isin(self.arr, list(closed.objects))
        if isinstance(closed, PrefixClass):
            if not closed.prefix:
                return np.ones(n, dtype=bool)
            return np.char.startswith(self.arr, closed.prefix)
        raise _mismatch(closed)


def _mismatch(closed: ClosedSet) -> TypeError:
    return TypeError(f"Closed set {type(closed).__name__} does not fit this column")


def _column(desc: ClosureDescriptor, values: Sequence[Any]):
    if isinstance(desc, Convex2DClosure):
        return _PointColumn(values)
    if desc.kind == "interordinal":
        return _RationalColumn(values)
    return _LabelColumn([str(v) for v in values])


class QueryIndex:
    """Membership masks of a query batch for closed sets of one descriptor."""

    def __init__(self, desc: ClosureDescriptor, queries: Sequence[Any]):
        self.size = len(queries)
        if isinstance(desc, ProductClosure):
            self.columns = [
                _column(component, [q[i] for q in queries])
                for i, component in enumerate(desc.components)
            ]
        else:
            self.columns = [_column(desc, list(queries))]
        self._product = isinstance(desc, ProductClosure)

    def mask(self, closed: ClosedSet) -> np.ndarray:
        if self.size == 0:
            return np.zeros(0, dtype=bool)
        if not self._product:
            return self.columns[0].mask(closed)
        if not isinstance(closed, ProductSet):
            raise _mismatch(closed)
        result = np.ones(self.size, dtype=bool)
        for column, component in zip(self.columns, closed.components):
            result &= column.mask(component)
            if not result.any():
                break
        return result
