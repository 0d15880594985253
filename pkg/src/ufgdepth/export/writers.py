"""
Writers for the command outputs.

Fractions are written as exact strings ("3/7") next to a 15 significant
digit decimal; the fraction is authoritative. Nothing time- or
worker-dependent is written, so equal inputs give byte-identical files.
"""

import json
import logging
from decimal import Decimal, localcontext
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import pandas as pd

from ..depth import DepthResult
from ..errors import UfgError

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
SIGNIFICANT_DIGITS = 15

PathLike = Union[str, Path]


def decimal_string(value: Fraction, digits: int = SIGNIFICANT_DIGITS) -> str:
    """Round a fraction to `digits` significant digits."""
    value = Fraction(value)
    with localcontext() as ctx:
        ctx.prec = digits
        d = Decimal(value.numerator) / Decimal(value.denominator)
        return format(d.normalize() if d else Decimal(0), "f")


def _value(v: Fraction) -> Dict[str, str]:
    return {"fraction": str(Fraction(v)), "decimal": decimal_string(v)}


def _write_csv(df: pd.DataFrame, path: PathLike) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    df.to_csv(path, index=False, lineterminator="\n")
    logger.info("Wrote file", extra={"path": str(path), "rows": len(df)})
    return path


def write_json(payload: Mapping[str, Any], path: PathLike) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(payload, fh, indent=2, sort_keys=False)
        fh.write("\n")
    logger.info("Wrote file", extra={"path": str(path)})
    return path


def depths_frame(result: DepthResult) -> pd.DataFrame:
    """One row per query: id, exact and decimal depth, weighted terms C_j a_j / b_j, sample flag."""
    records = []
    for row in result.rows:
        record = {
            "query_id": row.query_id,
            "depth": str(row.depth),
            "depth_decimal": decimal_string(row.depth),
        }
        for j, term in enumerate(row.terms, start=1):
            record[f"term_j{j}"] = str(term)
        record["in_sample"] = "true" if row.in_sample else "false"
        records.append(record)
    columns = ["query_id", "depth", "depth_decimal"] + [f"term_j{j}" for j in range(1, result.j_max + 1)] + ["in_sample"]
    return pd.DataFrame.from_records(records, columns=columns)


def write_depths_csv(result: DepthResult, path: PathLike) -> Path:
    return _write_csv(depths_frame(result), path)


def summary_payload(result: DepthResult, extra: Optional[Mapping[str, Any]] = None) -> Dict[str, Any]:
    """
    Summary of a depth run.

    Medians and minimizers keep every tied query id.
    """
    payload: Dict[str, Any] = {"schema_version": SCHEMA_VERSION}
    payload.update(extra or {})
    payload.update({
        "J": sorted(result.J),
        "b": {f"j{j}": str(b) for j, b in enumerate(result.b, start=1)},
        "weights": {f"C{j}": str(result.weights.c(j)) for j in range(1, result.j_max + 1)},
        "n_queries": len(result.rows),
        "median": {"query_ids": result.medians, "depth": _value(result.maximum)} if result.rows else None,
        "maximum": _value(result.maximum) if result.rows else None,
        "minimum": {"query_ids": result.minimizers, "depth": _value(result.minimum)} if result.rows else None,
        "distinct_values": result.distinct_values,
        "warnings": list(result.warnings),
    })
    return payload


def write_summary_json(result: DepthResult, path: PathLike, extra: Optional[Mapping[str, Any]] = None) -> Path:
    return write_json(summary_payload(result, extra), path)


def write_grid_csv(
    ids: Sequence[str],
    elements: Sequence[Any],
    covariates: Sequence[Tuple[str, str]],
    result: DepthResult,
    path: PathLike,
) -> Path:
    """x, y, vegetation, elevation and depth per grid point, as decimals for plotting."""
    records = []
    for element, (vegetation, elevation), row in zip(elements, covariates, result.rows):
        point = element[0] if isinstance(element, tuple) else element
        records.append({
            "x": decimal_string(point.x),
            "y": decimal_string(point.y),
            "vegetation": vegetation,
            "elevation": decimal_string(Fraction(elevation)) if elevation else "",
            "depth": decimal_string(row.depth),
        })
    return _write_csv(pd.DataFrame.from_records(records, columns=["x", "y", "vegetation", "elevation", "depth"]), path)


def write_premises_csv(result: DepthResult, path: PathLike) -> Path:
    """Premise weight b_j per cardinality and membership in J."""
    df = pd.DataFrame({
        "j": list(range(1, result.j_max + 1)),
        "b_j": [str(b) for b in result.b],
        "in_J": ["true" if j in result.J else "false" for j in range(1, result.j_max + 1)],
    })
    return _write_csv(df, path)


def write_extents_csv(rows: Iterable[Tuple[Sequence[str], Sequence[str], Fraction]], path: PathLike) -> Path:
    """Extents with their intents and empirical mass; object and attribute ids space-separated."""
    records = [
        {
            "extent": " ".join(extent),
            "size": len(extent),
            "intent": " ".join(intent),
            "mass": str(mass),
            "mass_decimal": decimal_string(mass),
        }
        for extent, intent, mass in rows
    ]
    return _write_csv(pd.DataFrame.from_records(records, columns=["extent", "size", "intent", "mass", "mass_decimal"]), path)


def write_tukey_csv(ids: Sequence[str], values: Sequence[Fraction], path: PathLike) -> Path:
    df = pd.DataFrame({
        "query_id": list(ids),
        "tukey": [str(v) for v in values],
        "tukey_decimal": [decimal_string(v) for v in values],
    })
    return _write_csv(df, path)


def write_compare_json(
    ufg: DepthResult,
    mode: List[str],
    topdown: List[str],
    tukey: Mapping[str, Fraction],
    path: PathLike,
) -> Path:
    """
    Central tendency summary for hierarchical codes.

    `topdown_differs_from_mode` flags samples whose finest mode lies outside
    the modal class chosen at some coarser level.
    """
    tukey_values = sorted(set(tukey.values()), reverse=True)
    tukey_top = tukey_values[0] if tukey_values else Fraction(0)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "ufg_median": {"codes": ufg.medians, "depth": _value(ufg.maximum)},
        "ufg_minimum": {"codes": ufg.minimizers, "depth": _value(ufg.minimum)},
        "ufg_distinct_values": ufg.distinct_values,
        "finest_mode": mode,
        "topdown_median": topdown,
        "topdown_differs_from_mode": set(topdown) != set(mode),
        "tukey": {
            "distinct_values": len(tukey_values),
            "values": [_value(v) for v in tukey_values],
            "median": sorted(code for code, v in tukey.items() if v == tukey_top),
        },
        "warnings": list(ufg.warnings),
    }
    return write_json(payload, path)


def error_payload(error: Exception) -> Dict[str, Any]:
    """Machine-readable error object written to standard error by the CLI."""
    if isinstance(error, UfgError):
        body = error.to_dict()
    else:
        body = {"code": "internal", "message": str(error) or type(error).__name__, "details": {"type": type(error).__name__}}
    return {"schema_version": SCHEMA_VERSION, "error": body}
