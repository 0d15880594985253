"""
Finite witness candidates for each kind of coordinate.

For points of the plane the candidates come from the arrangement of all
lines through two of the points: on every vertical line through a vertex of
the arrangement, and on one vertical line inside every slab between them,
take the crossings with the arrangement lines and the midpoints between
consecutive crossings. Every face, edge and vertex of the arrangement
receives at least one candidate, and membership in the hull of any subset
is constant on each of them.
"""

from fractions import Fraction
from itertools import combinations
from typing import List, Sequence, Set, Tuple

Line = Tuple[Fraction, Fraction]  # y = m x + c


def _lines(points: Sequence[Tuple[Fraction, Fraction]]) -> Tuple[Set[Line], Set[Fraction]]:
    sloped: Set[Line] = set()
    vertical: Set[Fraction] = set()
    for (x1, y1), (x2, y2) in combinations(points, 2):
        if x1 == x2:
            vertical.add(x1)
        else:
            m = (y2 - y1) / (x2 - x1)
            sloped.add((m, y1 - m * x1))
    return sloped, vertical


def _column(x: Fraction, sloped: Set[Line], extra: Sequence[Fraction]) -> List[Tuple[Fraction, Fraction]]:
    ys = sorted({m * x + c for m, c in sloped} | set(extra))
    out = [(x, y) for y in ys]
    out.extend((x, (lo + hi) / 2) for lo, hi in zip(ys, ys[1:]))
    return out


def plane_candidates(points: Sequence[Tuple[Fraction, Fraction]]) -> List[Tuple[Fraction, Fraction]]:
    """Candidate points covering every cell of the arrangement spanned by the points."""
    points = sorted(set((Fraction(x), Fraction(y)) for x, y in points))
    sloped, vertical = _lines(points)

    breaks = {x for x, _ in points} | vertical
    for (m1, c1), (m2, c2) in combinations(sloped, 2):
        if m1 != m2:
            breaks.add((c2 - c1) / (m1 - m2))
    breaks = sorted(breaks)

    out: Set[Tuple[Fraction, Fraction]] = set(points)
    for x in breaks:
        out.update(_column(x, sloped, [y for px, y in points if px == x]))
    for lo, hi in zip(breaks, breaks[1:]):
        out.update(_column((lo + hi) / 2, sloped, []))
    return sorted(out)


def line_candidates(values: Sequence[Fraction]) -> List[Fraction]:
    """The values and the midpoints between consecutive distinct values."""
    vs = sorted(set(Fraction(v) for v in values))
    return vs + [(a + b) / 2 for a, b in zip(vs, vs[1:])]
