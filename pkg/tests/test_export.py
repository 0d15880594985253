"""
Tests for output writers.
"""
import json
from fractions import Fraction

from ufgdepth.closures import Convex2DClosure
from ufgdepth.depth import ufg_depth
from ufgdepth.errors import IngestError, ResourceLimitError
from ufgdepth.export import (
    SCHEMA_VERSION,
    decimal_string,
    depths_frame,
    error_payload,
    summary_payload,
    write_compare_json,
    write_depths_csv,
    write_premises_csv,
)
from ufgdepth.geometry import Point2
from ufgdepth.processing.data_validator import ValidationError
from ufgdepth.sample import Sample


def _square_result():
    corners = [Point2(0, 0), Point2(2, 0), Point2(2, 2), Point2(0, 2)]
    return ufg_depth(
        Sample.from_elements(corners),
        [Point2(1, 1), Point2(0, 0), Point2(5, 5)],
        Convex2DClosure(),
        query_ids=["center", "corner", "far"],
    )


def test_decimal_string():
    """Test rounding to fifteen significant digits."""
    test_cases = [
        (Fraction(1, 3), "0.333333333333333"),
        (Fraction(2, 3), "0.666666666666667"),
        (Fraction(3, 4), "0.75"),
        (Fraction(1500), "1500"),
        (Fraction(0), "0"),
        (Fraction(-5, 2), "-2.5"),
    ]
    for value, expected in test_cases:
        assert decimal_string(value) == expected


def test_depths_frame():
    """Test columns and cells of depths.csv."""
    df = depths_frame(_square_result())
    assert list(df.columns) == ["query_id", "depth", "depth_decimal", "term_j1", "term_j2", "term_j3", "in_sample"]
    center = df.iloc[0]
    assert center["depth"] == "4/3"
    assert center["depth_decimal"] == "1.33333333333333"
    assert center["term_j2"] == "1/3"
    assert list(df["in_sample"]) == ["false", "true", "false"]


def test_depths_csv_is_stable(tmp_path):
    """Test that writing twice gives byte-identical files with LF line ends."""
    result = _square_result()
    first = write_depths_csv(result, tmp_path / "a" / "depths.csv").read_bytes()
    second = write_depths_csv(result, tmp_path / "b" / "depths.csv").read_bytes()
    assert first == second
    assert b"\r\n" not in first
    assert first.splitlines()[1] == b"center,4/3,1.33333333333333,0,1/3,1,false"


def test_summary_payload():
    """Test the summary object with medians, extremes and J."""
    payload = summary_payload(_square_result(), {"kind": "spatial"})
    assert payload["schema_version"] == SCHEMA_VERSION
    assert payload["kind"] == "spatial"
    assert payload["J"] == [2, 3]
    assert payload["b"] == {"j1": "0", "j2": "6", "j3": "4"}
    assert payload["weights"] == {"C1": "1", "C2": "1", "C3": "1"}
    assert payload["median"] == {"query_ids": ["center"], "depth": {"fraction": "4/3", "decimal": "1.33333333333333"}}
    assert payload["minimum"]["query_ids"] == ["far"]
    assert payload["distinct_values"] == 3
    json.dumps(payload)


def test_premises_csv(tmp_path):
    """Test the b_j table."""
    path = write_premises_csv(_square_result(), tmp_path / "premises.csv")
    assert path.read_text().splitlines() == ["j,b_j,in_J", "1,0,false", "2,6,true", "3,4,true"]


def test_compare_json(tmp_path):
    """Test the central tendency summary for codes."""
    result = _square_result()
    path = write_compare_json(
        result, ["21"], ["11", "12"], {"11": Fraction(1, 2), "12": Fraction(1, 2), "21": Fraction(1, 4)}, tmp_path / "compare.json"
    )
    payload = json.loads(path.read_text())
    assert payload["topdown_differs_from_mode"] is True
    assert payload["tukey"]["distinct_values"] == 2
    assert payload["tukey"]["median"] == ["11", "12"]
    assert payload["ufg_median"]["codes"] == ["center"]


def test_error_payload():
    """Test error objects for library errors and unexpected exceptions."""
    payload = error_payload(ResourceLimitError("too many", {"limit": 5}))
    assert payload == {
        "schema_version": SCHEMA_VERSION,
        "error": {"code": "resource_limit", "message": "too many", "details": {"limit": 5}},
    }

    ingest = error_payload(IngestError("bad file", [ValidationError("type_mismatch", "bad cell", "x", [3])]))
    assert ingest["error"]["details"]["errors"] == [
        {"error_type": "type_mismatch", "message": "bad cell", "column": "x", "lines": [3]}
    ]

    assert error_payload(KeyError("k"))["error"]["code"] == "internal"
