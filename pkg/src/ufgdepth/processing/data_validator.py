"""
Validation of input tables before they are turned into samples.
Checks required columns, cell types and covariate conflicts, reporting file line numbers.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

import pandas as pd

logger = logging.getLogger(__name__)

# header occupies line 1
FIRST_DATA_LINE = 2


@dataclass
class ValidationError:
    """Represents a validation error that blocks ingestion."""
    error_type: str  # e.g., "missing_column", "type_mismatch", "conflicting_covariates"
    message: str
    column_name: Optional[str] = None
    line_numbers: Optional[List[int]] = None
    details: Optional[Dict[str, Any]] = None


@dataclass
class ValidationWarning:
    """Represents an issue that doesn't block ingestion but might need attention."""
    warning_type: str  # e.g., "zero_weight", "extra_columns"
    message: str
    column_name: Optional[str] = None
    line_numbers: Optional[List[int]] = None
    details: Optional[Dict[str, Any]] = None


@dataclass
class ValidationResult:
    """Container for validation results with errors and warnings."""
    is_valid: bool = True
    errors: List[ValidationError] = field(default_factory=list)
    warnings: List[ValidationWarning] = field(default_factory=list)
    stats: Dict[str, Any] = field(default_factory=dict)

    def add_error(self, error: ValidationError) -> None:
        """Add an error and mark the validation as invalid."""
        self.errors.append(error)
        self.is_valid = False

    def add_warning(self, warning: ValidationWarning) -> None:
        self.warnings.append(warning)

    def merge(self, other: "ValidationResult") -> None:
        """Merge another validation result into this one."""
        self.errors.extend(other.errors)
        self.warnings.extend(other.warnings)
        self.is_valid = self.is_valid and other.is_valid

        for key, value in other.stats.items():
            if key in self.stats and isinstance(value, int) and isinstance(self.stats[key], int):
                self.stats[key] += value
            else:
                self.stats[key] = value


@dataclass(frozen=True)
class ColumnInfo:
    """Expected column of an input table."""
    name: str
    data_type: str  # "id", "rational", "weight", "code", "category", "bit"
    required: bool = True


@dataclass(frozen=True)
class SchemaInfo:
    """Expected layout of one input kind."""
    kind: str
    columns: Tuple[ColumnInfo, ...]

    @property
    def column_names(self) -> List[str]:
        return [col.name for col in self.columns]

    @property
    def required_names(self) -> List[str]:
        return [col.name for col in self.columns if col.required]


def line_numbers(indices) -> List[int]:
    """Convert positional row indices to 1-based file line numbers."""
    return [int(i) + FIRST_DATA_LINE for i in indices]


def validate_frame(
    df: pd.DataFrame,
    schema: SchemaInfo,
    validation_options: Optional[Dict[str, Any]] = None,
) -> ValidationResult:
    """
    Master validation function that performs all checks.

    Args:
        df: DataFrame read with every cell as a string, positional index
        schema: Expected columns for the data kind
        validation_options: Optional configuration for validation
            - ignore_extra_columns: Whether to skip the extra-columns warning (default: False)
            - check_duplicates: Whether to reject repeated observation ids (default: True)
            - max_error_rows: Maximum number of line numbers to include in errors (default: 10)
            - covariate_key: Columns identifying a location (default: none)
            - covariate_values: Columns that must agree for equal locations (default: none)

    Returns:
        ValidationResult with validation outcome including errors and warnings
    """
    options = {
        "ignore_extra_columns": False,
        "check_duplicates": True,
        "max_error_rows": 10,
        "covariate_key": (),
        "covariate_values": (),
    }
    if validation_options:
        options.update(validation_options)

    result = ValidationResult()
    result.stats["row_count"] = len(df)

    result.merge(check_required_columns(df, schema, options))
    if not result.is_valid:
        return result

    result.merge(validate_data_types(df, schema, options))

    if options["check_duplicates"] and "id" in df.columns:
        result.merge(check_for_duplicates(df, options))

    if options["covariate_key"] and result.is_valid:
        result.merge(check_covariate_conflicts(df, options))

    return result


def check_required_columns(
    df: pd.DataFrame,
    schema: SchemaInfo,
    options: Optional[Dict[str, Any]] = None,
) -> ValidationResult:
    """Check that every required column exists; warn about unknown columns."""
    result = ValidationResult()

    missing = [name for name in schema.required_names if name not in df.columns]
    if missing:
        result.add_error(ValidationError(
            error_type="missing_required_columns",
            message=f"Missing required columns for {schema.kind} data: {', '.join(missing)}",
            details={"columns": missing, "expected": schema.column_names},
        ))

    if not options or not options.get("ignore_extra_columns", False):
        extra = [col for col in df.columns if col not in schema.column_names]
        if extra:
            result.add_warning(ValidationWarning(
                warning_type="extra_columns",
                message=f"Input contains columns that are ignored: {', '.join(extra)}",
                details={"columns": extra},
            ))

    result.stats["missing_columns"] = len(missing)
    return result


def _is_rational(value: str) -> bool:
    try:
        Fraction(value.strip())
    except (ValueError, ZeroDivisionError):
        return False
    return True


def _is_weight(value: str) -> bool:
    return _is_rational(value) and Fraction(value.strip()) >= 0


_CHECKS = {
    "id": lambda v: bool(v.strip()),
    "rational": _is_rational,
    "weight": _is_weight,
    "code": lambda v: v.strip().isdigit(),
    "category": lambda v: bool(v.strip()),
    "bit": lambda v: v.strip() in ("0", "1"),
}

_EXPECTED = {
    "id": "a non-empty identifier",
    "rational": "exact decimal or fraction values",
    "weight": "nonnegative decimal or fraction values",
    "code": "digit-only codes",
    "category": "non-empty category labels",
    "bit": "0 or 1",
}


def validate_data_types(
    df: pd.DataFrame,
    schema: SchemaInfo,
    options: Optional[Dict[str, Any]] = None,
) -> ValidationResult:
    """
    Validate every cell of the known columns against its expected type.

    Empty cells are invalid in every column that is present.
    """
    result = ValidationResult()
    max_error_rows = options.get("max_error_rows", 10) if options else 10

    for col_info in schema.columns:
        if col_info.name not in df.columns:
            continue
        check = _CHECKS[col_info.data_type]
        invalid_rows = [
            idx for idx, val in enumerate(df[col_info.name])
            if pd.isna(val) or not check(str(val))
        ]
        if invalid_rows:
            first = df[col_info.name].iloc[invalid_rows[0]]
            result.add_error(ValidationError(
                error_type="type_mismatch",
                message=(
                    f"Column '{col_info.name}' should contain {_EXPECTED[col_info.data_type]}; "
                    f"got {first!r} at line {invalid_rows[0] + FIRST_DATA_LINE}"
                ),
                column_name=col_info.name,
                line_numbers=line_numbers(invalid_rows[:max_error_rows]),
                details={"expected_type": col_info.data_type, "total_invalid": len(invalid_rows)},
            ))

    return result


def check_for_duplicates(
    df: pd.DataFrame,
    options: Optional[Dict[str, Any]] = None,
) -> ValidationResult:
    """Observation ids must be unique."""
    result = ValidationResult()
    max_error_rows = options.get("max_error_rows", 10) if options else 10

    duplicates = df["id"].duplicated(keep="first").to_numpy().nonzero()[0]
    if len(duplicates):
        result.add_error(ValidationError(
            error_type="duplicate_key",
            message=f"Found {len(duplicates)} repeated observation ids",
            column_name="id",
            line_numbers=line_numbers(duplicates[:max_error_rows]),
            details={
                "total_duplicates": len(duplicates),
                "sample_values": [str(df["id"].iloc[i]) for i in duplicates[:max_error_rows]],
            },
        ))
    return result


def check_covariate_conflicts(
    df: pd.DataFrame,
    options: Dict[str, Any],
) -> ValidationResult:
    """
    Rows sharing a location must agree on their covariates.

    Locations are compared as exact rationals, so "1.50" and "3/2" are the same place.
    """
    result = ValidationResult()
    max_error_rows = options.get("max_error_rows", 10)
    key_cols = list(options["covariate_key"])
    value_cols = list(options["covariate_values"])

    seen: Dict[tuple, Tuple[int, tuple]] = {}
    conflicts: List[int] = []
    for idx in range(len(df)):
        row = df.iloc[idx]
        key = tuple(Fraction(str(row[c]).strip()) for c in key_cols)
        values = tuple(_normalize(row[c]) for c in value_cols)
        if key in seen and seen[key][1] != values:
            conflicts.append(idx)
        else:
            seen.setdefault(key, (idx, values))

    if conflicts:
        result.add_error(ValidationError(
            error_type="conflicting_covariates",
            message=(
                f"{len(conflicts)} record(s) repeat a location with different "
                f"{' / '.join(value_cols)}"
            ),
            column_name=",".join(key_cols),
            line_numbers=line_numbers(conflicts[:max_error_rows]),
            details={"total_conflicts": len(conflicts)},
        ))
    return result


def _normalize(value: Any) -> Any:
    text = str(value).strip()
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        return text
