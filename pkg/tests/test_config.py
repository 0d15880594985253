"""
Tests for run configuration and config files.
"""
from fractions import Fraction
from pathlib import Path

import pytest

from ufgdepth.config import RunConfig, load_config_file, parse_weights
from ufgdepth.errors import ConfigurationError


def test_parse_weights():
    """Test comma-separated and list weights."""
    w = parse_weights("1, 1/2,2")
    assert [w.c(j) for j in range(1, 5)] == [1, Fraction(1, 2), 2, 1]
    assert parse_weights(["0.25", 3]).c(1) == Fraction(1, 4)
    assert parse_weights(None).values == ()
    assert parse_weights("").c(7) == 1

    for bad in ("1,-1", "1,0", "one,two"):
        with pytest.raises(ConfigurationError):
            parse_weights(bad)


def test_run_config_validate():
    """Test that invalid combinations are refused."""
    base = {"input": Path("sample.csv"), "kind": "spatial"}
    assert RunConfig(**base).validate().workers == 1

    test_cases = [
        {"kind": "polar"},
        {"query_source": "web"},
        {"query_source": "file"},
        {"query_source": "grid"},
        {"kind": "hier"},
        {"ground_mode": "everything"},
        {"j_max": 0},
        {"workers": 0},
        {"max_n": -1},
        {"premise_cap": 0},
    ]
    for changes in test_cases:
        with pytest.raises(ConfigurationError):
            RunConfig(**{**base, **changes}).validate()

    hier = RunConfig(input=Path("codes.csv"), kind="hier", catalog=Path("isco.txt"), ground_mode="sample")
    assert hier.validate() is hier


def test_load_config_file(tmp_path):
    """Test a flat YAML file with kebab-case keys."""
    path = tmp_path / "ufg.yaml"
    path.write_text("kind: hier\ncatalog: isco08.txt\nweights: [1, 1/2]\nj-max: 3\n")
    values = load_config_file(path)
    assert values == {"kind": "hier", "catalog": "isco08.txt", "weights": [1, "1/2"], "j_max": 3}

    empty = tmp_path / "empty.yaml"
    empty.write_text("")
    assert load_config_file(empty) == {}


def test_load_config_file_errors(tmp_path):
    """Test unknown keys, nested values, broken YAML and a missing file."""
    test_cases = [
        ("unknown.yaml", "kind: table\ncolour: red\n", "colour"),
        ("nested.yaml", "kind: table\nweights:\n  C1: 1\n", "weights"),
        ("broken.yaml", "kind: [table\n", "YAML"),
        ("list.yaml", "- kind\n- table\n", "mapping"),
    ]
    for name, text, fragment in test_cases:
        path = tmp_path / name
        path.write_text(text)
        with pytest.raises(ConfigurationError) as info:
            load_config_file(path)
        assert fragment in str(info.value)

    with pytest.raises(ConfigurationError):
        load_config_file(tmp_path / "missing.yaml")
