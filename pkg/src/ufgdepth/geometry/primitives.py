"""
Exact rational points and the orientation predicate.
"""

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Union

from ..errors import InputError

Coordinate = Union[int, Fraction, str]


def as_fraction(value: Coordinate) -> Fraction:
    """Convert an int, Fraction or decimal string to a Fraction; floats are refused."""
    if isinstance(value, bool) or isinstance(value, float):
        raise InputError(f"Coordinates must be exact rationals, got {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    try:
        return Fraction(str(value).strip())
    except (ValueError, ZeroDivisionError):
        raise InputError(f"Invalid rational number: {value!r}") from None


@dataclass(frozen=True, order=True)
class Point2:
    """A point of the plane with exact rational coordinates."""

    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", as_fraction(self.x))
        object.__setattr__(self, "y", as_fraction(self.y))

    def __str__(self) -> str:
        return f"({self.x},{self.y})"


def cross(o: Point2, a: Point2, b: Point2) -> Fraction:
    """(a - o) x (b - o)"""
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def orientation(p: Point2, q: Point2, r: Point2) -> int:
    """
    Sign of the exact cross product (q - p) x (r - p).

    Returns:
        +1 for a counterclockwise turn, -1 for clockwise, 0 if collinear
    """
    value = cross(p, q, r)
    return (value > 0) - (value < 0)
