"""Result files: depths, summaries, grids and comparisons."""

from .writers import (
    SCHEMA_VERSION,
    decimal_string,
    depths_frame,
    error_payload,
    summary_payload,
    write_compare_json,
    write_depths_csv,
    write_extents_csv,
    write_grid_csv,
    write_json,
    write_premises_csv,
    write_summary_json,
    write_tukey_csv,
)

__all__ = [
    "SCHEMA_VERSION",
    "decimal_string",
    "depths_frame",
    "error_payload",
    "summary_payload",
    "write_compare_json",
    "write_depths_csv",
    "write_extents_csv",
    "write_grid_csv",
    "write_json",
    "write_premises_csv",
    "write_summary_json",
    "write_tukey_csv",
]
