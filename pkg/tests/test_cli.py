"""
Tests for the command-line interface.
"""
import json
import logging

import pandas as pd
import pytest
from click.testing import CliRunner

from ufgdepth.cli import cli, main
from ufgdepth.engine import resolve_j_max
from ufgdepth.oracle import depth_oracle
from ufgdepth.processing.ingest import ingest

SQUARE = "id,x,y\np1,0,0\np2,2,0\np3,2,2\np4,0,2\n"


@pytest.fixture(autouse=True)
def reset_logger():
    """Drop the handler bound to the runner's captured stream."""
    yield
    logger = logging.getLogger("ufgdepth")
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    logger.propagate = True


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


def _read(path) -> pd.DataFrame:
    return pd.read_csv(path, dtype=str, keep_default_na=False)


def _error(result) -> dict:
    lines = [line for line in result.output.splitlines() if line.startswith('{"schema_version"')]
    assert lines, result.output
    return json.loads(lines[-1])["error"]


def test_depth_command(runner, table_path, tmp_path):
    """Test depths.csv and summary.json against straight enumeration."""
    result = runner.invoke(cli, ["depth", str(table_path), "--kind", "table", "--output-dir", str(tmp_path)])
    assert result.exit_code == 0, result.output
    assert f"Wrote {tmp_path / 'depths.csv'}" in result.output

    data = ingest(table_path, "table")
    expected = depth_oracle(
        data.sample, data.sample.elements, data.desc, j_max=resolve_j_max(data.desc, None)
    )
    df = _read(tmp_path / "depths.csv")
    assert list(df["query_id"]) == ["g1", "g2", "g3", "g4", "g5", "g6"]
    assert list(df["depth"]) == [str(d) for d in expected.depths]
    assert set(df["in_sample"]) == {"true"}

    summary = json.loads((tmp_path / "summary.json").read_text())
    assert summary["schema_version"] == 1
    assert summary["kind"] == "table"
    assert summary["n_observations"] == 6
    assert summary["n_queries"] == 6


def test_depth_command_is_reproducible(runner, tmp_path):
    """Test that one and two workers write identical files."""
    sample = tmp_path / "square.csv"
    sample.write_text(SQUARE)
    outputs = []
    for workers in ("1", "2"):
        out = tmp_path / f"out{workers}"
        result = runner.invoke(cli, ["depth", str(sample), "--kind", "spatial", "--workers", workers, "--output-dir", str(out)])
        assert result.exit_code == 0, result.output
        outputs.append(((out / "depths.csv").read_bytes(), (out / "summary.json").read_bytes()))
    assert outputs[0] == outputs[1]


def test_query_file(runner, tmp_path):
    """Test depths of queries read from a file."""
    sample = tmp_path / "square.csv"
    sample.write_text(SQUARE)
    queries = tmp_path / "queries.csv"
    queries.write_text("id,x,y\ncenter,1,1\nfar,5,5\n")
    result = runner.invoke(cli, [
        "depth", str(sample), "--kind", "spatial", "--queries", str(queries), "--output-dir", str(tmp_path),
    ])
    assert result.exit_code == 0, result.output
    df = _read(tmp_path / "depths.csv")
    assert list(df["depth"]) == ["4/3", "0"]
    assert list(df["in_sample"]) == ["false", "false"]


def test_grid_command(runner, tmp_path):
    """Test grid.csv for a spatial sample."""
    sample = tmp_path / "square.csv"
    sample.write_text(SQUARE)
    result = runner.invoke(cli, [
        "grid", str(sample), "--kind", "spatial", "--grid", "0,2,0,2,3,3", "--output-dir", str(tmp_path),
    ])
    assert result.exit_code == 0, result.output
    df = _read(tmp_path / "grid.csv")
    assert list(df.columns) == ["x", "y", "vegetation", "elevation", "depth"]
    assert len(df) == 9
    assert df.iloc[0].tolist() == ["0", "0", "", "", "1.25"]
    assert df.iloc[4].tolist() == ["1", "1", "", "", "1.33333333333333"]


def test_grid_command_refuses_tables(runner, table_path, tmp_path):
    """Test that grids need point data."""
    result = runner.invoke(cli, [
        "grid", str(table_path), "--kind", "table", "--grid", "0,1,0,1,2,2", "--output-dir", str(tmp_path),
    ])
    assert result.exit_code == 2
    assert _error(result)["code"] == "configuration_error"


def test_compare_command(runner, hier_path, catalog_path, tmp_path):
    """Test the central tendency summary of the code sample."""
    result = runner.invoke(cli, [
        "compare", str(hier_path), "--kind", "hier", "--catalog", str(catalog_path), "--output-dir", str(tmp_path),
    ])
    assert result.exit_code == 0, result.output
    payload = json.loads((tmp_path / "compare.json").read_text())
    assert payload["ufg_median"]["codes"] == ["11"]
    assert payload["finest_mode"] == ["11"]
    assert payload["topdown_median"] == ["11"]
    assert payload["topdown_differs_from_mode"] is False


def test_premises_command(runner, table_path, tmp_path):
    """Test premises.csv and the printed J."""
    result = runner.invoke(cli, ["premises", str(table_path), "--kind", "table", "--output-dir", str(tmp_path)])
    assert result.exit_code == 0, result.output
    df = _read(tmp_path / "premises.csv")
    assert list(df.columns) == ["j", "b_j", "in_J"]
    assert df.iloc[0]["j"] == "1"
    J = [row["j"] for _, row in df.iterrows() if row["in_J"] == "true"]
    assert f"J = {{{', '.join(J)}}}" in result.output


def test_extents_command(runner, table_path, tmp_path):
    """Test that the empty extent and the full extent are listed with their masses."""
    result = runner.invoke(cli, ["extents", str(table_path), "--kind", "table", "--output-dir", str(tmp_path)])
    assert result.exit_code == 0, result.output
    df = _read(tmp_path / "extents.csv")
    by_size = {row["size"]: row for _, row in df.iterrows() if row["size"] in ("0", "6")}
    assert by_size["6"]["mass"] == "1"
    assert by_size["6"]["intent"] == ""
    assert by_size["0"]["mass"] == "0"
    assert by_size["0"]["intent"] == "a b c d e"

    result = runner.invoke(cli, ["extents", str(table_path), "--kind", "spatial", "--output-dir", str(tmp_path)])
    assert result.exit_code == 2


def test_tukey_command(runner, hier_path, catalog_path, tmp_path):
    """Test Tukey depth of the distinct sample codes."""
    result = runner.invoke(cli, [
        "tukey", str(hier_path), "--kind", "hier", "--catalog", str(catalog_path), "--output-dir", str(tmp_path),
    ])
    assert result.exit_code == 0, result.output
    df = _read(tmp_path / "tukey.csv")
    assert list(df["query_id"]) == ["11", "12", "13", "21", "22", "23", "31"]
    values = dict(zip(df["query_id"], df["tukey"]))
    assert values["11"] == "2/3"
    assert values["21"] == "3/7"


def test_errors(runner, tmp_path, hier_path):
    """Test exit code 2 and the error object for input and configuration errors."""
    result = runner.invoke(cli, ["depth", str(tmp_path / "missing.csv"), "--kind", "table"])
    assert result.exit_code == 2
    error = _error(result)
    assert error["code"] == "input_error"

    result = runner.invoke(cli, ["depth", str(hier_path), "--kind", "hier", "--output-dir", str(tmp_path)])
    assert result.exit_code == 2
    assert _error(result)["code"] == "configuration_error"

    result = runner.invoke(cli, ["depth", str(hier_path), "--kind", "hier", "--weights", "1,-2"])
    assert result.exit_code == 2


def test_config_file_and_environment(runner, table_path, tmp_path):
    """Test precedence of flags over UFG_ variables over the config file."""
    config = tmp_path / "ufg.yaml"
    config.write_text("kind: table\nweights: [2, 1]\n")
    out = tmp_path / "out"

    result = runner.invoke(cli, ["--config", str(config), "depth", str(table_path), "--output-dir", str(out)])
    assert result.exit_code == 0, result.output
    assert json.loads((out / "summary.json").read_text())["weights"]["C1"] == "2"

    result = runner.invoke(
        cli, ["--config", str(config), "depth", str(table_path), "--output-dir", str(out)],
        env={"UFG_DEPTH_WEIGHTS": "3"},
    )
    assert result.exit_code == 0, result.output
    assert json.loads((out / "summary.json").read_text())["weights"]["C1"] == "3"

    result = runner.invoke(
        cli, ["--config", str(config), "depth", str(table_path), "--output-dir", str(out), "--weights", "5"],
        env={"UFG_DEPTH_WEIGHTS": "3"},
    )
    assert result.exit_code == 0, result.output
    assert json.loads((out / "summary.json").read_text())["weights"]["C1"] == "5"

    bad = tmp_path / "bad.yaml"
    bad.write_text("colour: red\n")
    result = runner.invoke(cli, ["--config", str(bad), "depth", str(table_path)])
    assert result.exit_code == 2
    assert _error(result)["code"] == "configuration_error"


def test_main_entry_point(table_path, tmp_path, capsys):
    """Test the console entry point's return codes."""
    assert main(["depth", str(table_path), "--kind", "table", "--output-dir", str(tmp_path)]) == 0
    assert (tmp_path / "depths.csv").exists()
    assert main(["depth", str(tmp_path / "missing.csv"), "--kind", "table"]) == 2
    assert '"code": "input_error"' in capsys.readouterr().err
