"""
Reading input CSV files into samples and closure descriptors.

Every file is read with all cells as strings, so decimal values reach the
exact rational parser untouched. Rows are validated before any object is
built; failures are reported together with their file line numbers.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, List, Optional, Sequence, Tuple, Union

import pandas as pd

from ..closures import (
    ClosureDescriptor,
    CodeCatalog,
    Convex2DClosure,
    FiniteContextClosure,
    HierPrefixClosure,
)
from ..context import FormalContext
from ..engine import mixed_descriptor
from ..errors import ConfigurationError, IngestError, InputError
from ..geometry import Point2
from ..sample import Observation, Sample
from .data_validator import (
    ColumnInfo,
    SchemaInfo,
    ValidationError,
    ValidationResult,
    line_numbers,
    validate_frame,
)

logger = logging.getLogger(__name__)

KINDS = ("table", "mixed", "hier", "spatial")

SCHEMAS = {
    "mixed": SchemaInfo("mixed", (
        ColumnInfo("id", "id"),
        ColumnInfo("x", "rational"),
        ColumnInfo("y", "rational"),
        ColumnInfo("vegetation", "category"),
        ColumnInfo("elevation", "rational"),
        ColumnInfo("weight", "weight", required=False),
    )),
    "hier": SchemaInfo("hier", (
        ColumnInfo("id", "id"),
        ColumnInfo("code", "code"),
        ColumnInfo("weight", "weight", required=False),
    )),
    "spatial": SchemaInfo("spatial", (
        ColumnInfo("id", "id"),
        ColumnInfo("x", "rational"),
        ColumnInfo("y", "rational"),
        ColumnInfo("weight", "weight", required=False),
    )),
}

PathLike = Union[str, Path]


@dataclass
class IngestedData:
    """A validated sample with the descriptor of its ground space."""

    kind: str
    sample: Sample
    desc: ClosureDescriptor
    source: Optional[Path] = None
    context: Optional[FormalContext] = None
    warnings: List[str] = field(default_factory=list)


def read_csv_strings(path: PathLike, header: bool = True) -> pd.DataFrame:
    """
    Read a CSV file keeping every cell as a string.

    Raises:
        InputError: If the file is missing or holds no rows ("empty sample")
    """
    path = Path(path)
    if not path.exists():
        raise InputError(f"Input file not found: {path}", {"path": str(path)})
    try:
        df = pd.read_csv(
            path,
            dtype=str,
            keep_default_na=False,
            header=0 if header else None,
            skipinitialspace=True,
            encoding="utf-8",
        )
    except pd.errors.EmptyDataError:
        raise InputError("empty sample", {"path": str(path)}) from None
    except pd.errors.ParserError as e:
        raise InputError(f"Malformed CSV in {path.name}: {e}", {"path": str(path)}) from None
    if header:
        df.columns = [str(c).strip() for c in df.columns]
    if df.empty or (not header and len(df) < 2):
        raise InputError("empty sample", {"path": str(path)})
    return df.reset_index(drop=True)


def raise_if_invalid(result: ValidationResult, path: Path) -> List[str]:
    for warning in result.warnings:
        logger.warning(warning.message, extra={"path": str(path), "warning_type": warning.warning_type})
    if not result.is_valid:
        first = result.errors[0]
        where = f" (line {first.line_numbers[0]})" if first.line_numbers else ""
        raise IngestError(f"{path.name}: {first.message}{where}", result.errors, {"path": str(path)})
    return [w.message for w in result.warnings]


def _weights(df: pd.DataFrame) -> List[Fraction]:
    if "weight" in df.columns:
        return [Fraction(v.strip()) for v in df["weight"]]
    return [Fraction(1)] * len(df)


def ingest(
    path: PathLike,
    kind: str,
    catalog: Optional[Union[PathLike, CodeCatalog]] = None,
    categories: Optional[Sequence[str]] = None,
    ground_mode: str = "catalog",
    duplicates_allowed: bool = True,
    premise_cap: Optional[int] = None,
    validation_options: Optional[dict] = None,
) -> IngestedData:
    """
    Load a sample of the given kind.

    Args:
        path: CSV file
        kind: "table", "mixed", "hier" or "spatial"
        catalog: Code catalog (path or object), required for hierarchical data
        categories: Vegetation categories for mixed data (inferred when omitted)
        ground_mode: Hierarchical ground space, "catalog" or "sample"
        duplicates_allowed: Hierarchical codes stand for repeatable objects
        premise_cap: Premise cap for large finite contexts
        validation_options: Forwarded to validate_frame

    Returns:
        IngestedData with sample and descriptor

    Raises:
        IngestError: Schema violations, bad cells, conflicting covariates, unknown codes
        ConfigurationError: Unknown kind or missing catalog
    """
    if kind not in KINDS:
        raise ConfigurationError(f"Unknown data kind {kind!r}", {"allowed": list(KINDS)})
    path = Path(path)

    if kind == "table":
        return _ingest_table(path, premise_cap)

    df = read_csv_strings(path)
    options = dict(validation_options or {})
    if kind == "mixed":
        options.setdefault("covariate_key", ("x", "y"))
        options.setdefault("covariate_values", ("vegetation", "elevation"))
    warnings = raise_if_invalid(validate_frame(df, SCHEMAS[kind], options), path)
    weights = _weights(df)

    if kind == "spatial":
        elements = [Point2(x.strip(), y.strip()) for x, y in zip(df["x"], df["y"])]
        desc: ClosureDescriptor = Convex2DClosure()
    elif kind == "mixed":
        vegetation = [v.strip() for v in df["vegetation"]]
        if categories:
            unknown = [i for i, v in enumerate(vegetation) if v not in categories]
            if unknown:
                raise IngestError(
                    f"{path.name}: vegetation {vegetation[unknown[0]]!r} is not a configured category",
                    [ValidationError("unknown_category", "Vegetation not in the category list", "vegetation", line_numbers(unknown[:10]))],
                )
            cats = list(categories)
        else:
            cats = sorted(set(vegetation))
        elements = [
            (Point2(x.strip(), y.strip()), v, Fraction(e.strip()))
            for x, y, v, e in zip(df["x"], df["y"], vegetation, df["elevation"])
        ]
        desc = mixed_descriptor(cats)
    else:
        desc = _hier_descriptor(path, df, catalog, ground_mode, duplicates_allowed)
        elements = [c.strip() for c in df["code"]]

    sample = Sample(tuple(
        Observation(obs_id.strip(), e, w) for obs_id, e, w in zip(df["id"], elements, weights)
    ))
    logger.info("Ingested sample", extra={"kind": kind, "path": str(path), "observations": len(sample)})
    return IngestedData(kind, sample, desc, path, warnings=warnings)


def _load_catalog(catalog: Optional[Union[PathLike, CodeCatalog]]) -> CodeCatalog:
    if catalog is None:
        raise ConfigurationError("Hierarchical data needs a code catalog (--catalog)")
    if isinstance(catalog, CodeCatalog):
        return catalog
    return CodeCatalog.from_file(catalog)


def _hier_descriptor(
    path: Path,
    df: pd.DataFrame,
    catalog: Optional[Union[PathLike, CodeCatalog]],
    ground_mode: str,
    duplicates_allowed: bool,
) -> HierPrefixClosure:
    codes = _load_catalog(catalog)
    values = [c.strip() for c in df["code"]]
    missing = [i for i, c in enumerate(values) if c not in codes]
    if missing:
        raise IngestError(
            f"{path.name}: code {values[missing[0]]!r} is not in the catalog (line {missing[0] + 2})",
            [ValidationError(
                "unknown_code",
                f"{len(missing)} code(s) missing from the catalog",
                "code",
                line_numbers(missing[:10]),
            )],
        )
    return HierPrefixClosure(codes, duplicates_allowed, ground_mode, tuple(values))


def _ingest_table(path: Path, premise_cap: Optional[int]) -> IngestedData:
    raw = read_csv_strings(path, header=False)
    header = [str(h).strip() for h in raw.iloc[0]]
    body = raw.iloc[1:].reset_index(drop=True)
    attributes = header[1:]

    result = ValidationResult()
    repeated = sorted({a for a in attributes if attributes.count(a) > 1})
    if repeated:
        result.add_error(ValidationError(
            "duplicate_attribute", f"Repeated attribute ids: {', '.join(repeated)}", details={"attributes": repeated}
        ))
    ids = [str(v).strip() for v in body.iloc[:, 0]]
    body_cells = body.iloc[:, 1:].apply(lambda col: col.str.strip())
    body_cells.columns = [f"c{i}" for i in range(len(attributes))]
    frame = pd.concat([pd.Series(ids, name="id"), body_cells], axis=1)
    schema = SchemaInfo("table", (ColumnInfo("id", "id"),) + tuple(
        ColumnInfo(f"c{i}", "bit") for i in range(len(attributes))
    ))
    result.merge(validate_frame(frame, schema, {"ignore_extra_columns": True}))
    for err in result.errors:
        placeholder = err.column_name or ""
        if placeholder.startswith("c") and placeholder[1:].isdigit():
            err.column_name = attributes[int(placeholder[1:])]
            err.message = err.message.replace(f"'{placeholder}'", f"'{err.column_name}'")
    raise_if_invalid(result, path)

    cells = body_cells == "1"
    cells.index = ids
    cells.columns = attributes
    ctx = FormalContext.from_frame(cells)
    sample = Sample.from_elements(list(ids), ids=ids)
    logger.info("Ingested formal context", extra={"objects": ctx.n_objects, "attributes": ctx.n_attributes})
    return IngestedData("table", sample, FiniteContextClosure(ctx, premise_cap), path, context=ctx)


def load_queries(path: PathLike, data: IngestedData) -> Tuple[List[str], List[Any]]:
    """
    Query ids and elements from a CSV in the sample's schema (weights ignored).

    Table queries list object ids in an `id` column.
    """
    path = Path(path)
    df = read_csv_strings(path)
    if data.kind == "table":
        schema = SchemaInfo("table-queries", (ColumnInfo("id", "id"),))
    else:
        schema = SchemaInfo(data.kind, tuple(c for c in SCHEMAS[data.kind].columns if c.name != "weight"))
    raise_if_invalid(validate_frame(df, schema, {"ignore_extra_columns": True, "check_duplicates": True}), path)

    ids = [v.strip() for v in df["id"]]
    if data.kind == "table":
        elements: List[Any] = ids
    elif data.kind == "spatial":
        elements = [Point2(x.strip(), y.strip()) for x, y in zip(df["x"], df["y"])]
    elif data.kind == "mixed":
        elements = [
            (Point2(x.strip(), y.strip()), v.strip(), Fraction(e.strip()))
            for x, y, v, e in zip(df["x"], df["y"], df["vegetation"], df["elevation"])
        ]
    else:
        elements = [c.strip() for c in df["code"]]
    elements = [data.desc.validate(e) for e in elements]
    return ids, elements
