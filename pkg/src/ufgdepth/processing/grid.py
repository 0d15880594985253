"""
Regular query grids over the plane, with covariates looked up in a raster file.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, List, Optional, Sequence, Tuple, Union

from ..errors import ConfigurationError
from ..geometry import Point2, as_fraction
from .data_validator import ColumnInfo, SchemaInfo, validate_frame
from .ingest import raise_if_invalid, read_csv_strings

logger = logging.getLogger(__name__)

RASTER_SCHEMA = SchemaInfo("raster", (
    ColumnInfo("x", "rational"),
    ColumnInfo("y", "rational"),
    ColumnInfo("vegetation", "category"),
    ColumnInfo("elevation", "rational"),
))


@dataclass(frozen=True)
class GridSpec:
    """nx x ny equally spaced points spanning [xmin, xmax] x [ymin, ymax]."""

    xmin: Fraction
    xmax: Fraction
    ymin: Fraction
    ymax: Fraction
    nx: int
    ny: int

    def __post_init__(self):
        for name in ("xmin", "xmax", "ymin", "ymax"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))
        if self.nx < 1 or self.ny < 1:
            raise ConfigurationError("Grid dimensions must be positive", {"nx": self.nx, "ny": self.ny})
        if self.xmin > self.xmax or self.ymin > self.ymax:
            raise ConfigurationError(
                "Grid bounds must satisfy xmin <= xmax and ymin <= ymax",
                {"bounds": [str(self.xmin), str(self.xmax), str(self.ymin), str(self.ymax)]},
            )

    @classmethod
    def parse(cls, text: str) -> "GridSpec":
        """Parse "xmin,xmax,ymin,ymax,nx,ny"."""
        parts = [p.strip() for p in str(text).split(",")]
        if len(parts) != 6:
            raise ConfigurationError(f"Grid spec needs six values xmin,xmax,ymin,ymax,nx,ny; got {text!r}")
        try:
            nx, ny = int(parts[4]), int(parts[5])
        except ValueError:
            raise ConfigurationError(f"Grid sizes must be integers; got {parts[4]!r}, {parts[5]!r}") from None
        try:
            bounds = [Fraction(p) for p in parts[:4]]
        except (ValueError, ZeroDivisionError):
            raise ConfigurationError(f"Grid bounds must be exact decimals; got {text!r}") from None
        return cls(*bounds, nx, ny)

    @staticmethod
    def _axis(lo: Fraction, hi: Fraction, n: int) -> List[Fraction]:
        if n == 1:
            return [lo]
        step = (hi - lo) / (n - 1)
        return [lo + i * step for i in range(n)]

    def points(self) -> List[Tuple[str, Point2]]:
        """Grid points row by row (y outer, x inner) with ids "row_col"."""
        xs = self._axis(self.xmin, self.xmax, self.nx)
        ys = self._axis(self.ymin, self.ymax, self.ny)
        return [(f"{r}_{c}", Point2(x, y)) for r, y in enumerate(ys) for c, x in enumerate(xs)]


@dataclass(frozen=True)
class Raster:
    """Covariate cells; each grid point takes the nearest cell (first listed on ties)."""

    cells: Tuple[Tuple[Point2, str, Fraction], ...]

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> "Raster":
        path = Path(path)
        df = read_csv_strings(path)
        raise_if_invalid(validate_frame(df, RASTER_SCHEMA, {"ignore_extra_columns": True, "check_duplicates": False}), path)
        cells = tuple(
            (Point2(x.strip(), y.strip()), v.strip(), Fraction(e.strip()))
            for x, y, v, e in zip(df["x"], df["y"], df["vegetation"], df["elevation"])
        )
        logger.info("Loaded raster", extra={"path": str(path), "cells": len(cells)})
        return cls(cells)

    def lookup(self, p: Point2) -> Tuple[str, Fraction]:
        best = min(
            range(len(self.cells)),
            key=lambda i: ((self.cells[i][0].x - p.x) ** 2 + (self.cells[i][0].y - p.y) ** 2, i),
        )
        _, vegetation, elevation = self.cells[best]
        return vegetation, elevation


def grid_queries(
    spec: GridSpec,
    kind: str,
    raster: Optional[Raster] = None,
    vegetation: Optional[str] = None,
    elevation: Optional[Any] = None,
) -> Tuple[List[str], List[Any]]:
    """
    Query ids and elements for every grid point.

    Mixed data needs covariates: either a raster or both constants. A constant
    overrides the raster for its column.

    Raises:
        ConfigurationError: Wrong kind or missing covariates
    """
    if kind not in ("mixed", "spatial"):
        raise ConfigurationError(f"Grids are defined for mixed and spatial data, not {kind!r}")
    points = spec.points()
    ids = [pid for pid, _ in points]
    if kind == "spatial":
        return ids, [p for _, p in points]

    if raster is None and (vegetation is None or elevation is None):
        raise ConfigurationError(
            "Mixed grids need a raster file (--raster) or constant --vegetation and --elevation"
        )
    constant_elevation = as_fraction(elevation) if elevation is not None else None
    elements: List[Any] = []
    for _, p in points:
        if raster is not None:
            veg, elev = raster.lookup(p)
        else:
            veg, elev = vegetation, constant_elevation
        if vegetation is not None:
            veg = vegetation
        if constant_elevation is not None:
            elev = constant_elevation
        elements.append((p, veg, elev))
    return ids, elements


def grid_covariates(elements: Sequence[Any]) -> List[Tuple[str, str]]:
    """(vegetation, elevation) strings for the grid.csv columns; blank for spatial points."""
    return [(str(e[1]), str(e[2])) if isinstance(e, tuple) else ("", "") for e in elements]
