"""
Tests for the command line interface, run configuration and validator.
"""

import argparse
import io
import json
import math
import shutil
import tempfile
from pathlib import Path

import numpy as np
import pytest

from src import __version__
from src.cli import EXIT_NUMERICAL, EXIT_OK, EXIT_USAGE, main
from src.config import RunConfig, load_config, max_workers
from src.errors import UsageError
from src.export import read_grid_csv, read_header
from src.validator import RunConfigValidator


@pytest.fixture
def temp_dir():
    """Create a temporary directory for config and output files."""
    temp_dir = tempfile.mkdtemp()
    yield Path(temp_dir)
    shutil.rmtree(temp_dir)


def _csv_rows(text):
    lines = [line for line in text.splitlines() if line and not line.startswith("#")]
    return lines[0].split(","), [line.split(",") for line in lines[1:]]


def test_kernel_dirichlet_zero(capsys):
    """D_0 on a 4x4 grid: 16 rows, all equal to 1."""
    code = main(["kernel", "--type", "dirichlet", "--n", "0", "--grid", "4"])
    assert code == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith(f"# hexharmonic {__version__}: hexharmonic kernel --type dirichlet")
    columns, rows = _csv_rows(out)
    assert columns == ["s1", "s2", "t1", "t2", "t3", "value"]
    assert len(rows) == 16
    assert all(float(row[-1]) == 1.0 for row in rows)


def test_kernel_as_grid_function(capsys):
    """--as-grid writes the N line and rows a,b,re,im that read back as a GridFunction."""
    code = main(["kernel", "--type", "dirichlet", "--n", "0", "--grid", "4", "--as-grid"])
    assert code == EXIT_OK
    out = capsys.readouterr().out
    assert out.splitlines()[1] == "# N=4"
    columns, rows = _csv_rows(out)
    assert columns == ["a", "b", "re", "im"]
    assert len(rows) == 16
    grid = read_grid_csv(io.StringIO(out))
    assert grid.N == 4
    np.testing.assert_allclose(grid.values, 1.0, atol=1e-12)


def test_kernel_usage_error(capsys):
    assert main(["kernel", "--type", "poisson", "--r", "1.5"]) == EXIT_USAGE
    assert main(["kernel", "--type", "cesaro", "--n", "3"]) == EXIT_USAGE
    assert capsys.readouterr().out == ""


def test_kernel_imaginary_residue_is_numerical_failure(monkeypatch):
    monkeypatch.setattr("src.cli.evaluate_kernel", lambda spec, t: np.full(t.shape, 1j))
    assert main(["kernel", "--type", "dirichlet", "--n", "2", "--grid", "4"]) == EXIT_NUMERICAL


def test_missing_command_is_usage_error(capsys):
    assert main([]) == EXIT_USAGE


def test_invalid_choice_exits_with_usage_code():
    with pytest.raises(SystemExit) as excinfo:
        main(["kernel", "--type", "fejer"])
    assert excinfo.value.code == 2


def test_expand_exponential_json(capsys):
    """phi_(1,0,-1) has a single unit entry after pruning."""
    code = main(["expand", "--f", "phi:1,0,-1", "--n", "2", "--format", "json"])
    assert code == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["function"] == "phi:1,0,-1"
    assert len(data["entries"]) == 1
    entry = data["entries"][0]
    assert entry["j"] == [1, 0, -1]
    assert entry["re"] == pytest.approx(1.0, abs=1e-12)


def test_expand_unknown_function(capsys):
    assert main(["expand", "--f", "spline", "--n", "2"]) == EXIT_USAGE


def test_summability_sweep(capsys):
    code = main(["summab", "--f", "gauss:0.3", "--method", "cesaro:1", "--ns", "2,4,8"])
    assert code == EXIT_OK
    columns, rows = _csv_rows(capsys.readouterr().out)
    assert columns == ["n", "error_p"]
    errors = [float(row[1]) for row in rows]
    assert [int(row[0]) for row in rows] == [2, 4, 8]
    assert errors[0] > errors[1] > errors[2]


def test_summability_bad_method(capsys):
    assert main(["summab", "--f", "cone", "--method", "fejer", "--ns", "4"]) == EXIT_USAGE


def test_report_bernstein_is_reproducible(capsys):
    """Identical invocations give byte-identical output."""
    argv = ["report", "bernstein", "--ns", "2,3", "--trials", "4", "--alpha", "1,0,0", "--seed", "7"]
    assert main(argv) == EXIT_OK
    first = capsys.readouterr().out
    assert main(argv) == EXIT_OK
    second = capsys.readouterr().out
    assert first == second
    columns, rows = _csv_rows(first)
    assert "max_ratio" in columns
    assert len(rows) == 2


def test_report_requires_experiment(capsys):
    assert main(["report"]) == EXIT_USAGE
    assert main(["report", "fourier"]) == EXIT_USAGE


def test_report_markdown(capsys):
    assert main(["report", "moments", "--ns", "2,4", "--r", "1", "--nu", "1", "--format", "md"]) == EXIT_OK
    text = capsys.readouterr().out
    assert "## Moments Report" in text
    assert "**spread**" in text


def test_triangle_command(capsys):
    code = main(["triangle", "--f", "gauss:0.3", "--n", "2", "--M", "16", "--cesaro", "--format", "json"])
    assert code == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert len(data["tri_entries"]) == 6
    assert data["summary"]["compatibility"] <= 1e-10
    assert data["summary"]["cesaro_sup_error"] > 0


def test_parquet_output(temp_dir):
    out = temp_dir / "kernel.parquet"
    code = main(["kernel", "--type", "theta", "--n", "1", "--grid", "4", "--format", "parquet", "--out", str(out)])
    assert code == EXIT_OK
    assert "kernel --type theta" in read_header(out)


def test_parquet_without_out_is_usage_error():
    assert main(["kernel", "--type", "theta", "--format", "parquet"]) == EXIT_USAGE


def test_config_file_with_override(capsys, temp_dir):
    """Values come from the JSON5 file; explicit flags win."""
    path = temp_dir / "run.json5"
    path.write_text("{\n  // relaxed syntax\n  f: 'phi:2,-1,-1',\n  n: 1,\n  format: 'json',\n}\n",
                    encoding="utf-8")
    assert main(["expand", "--config", str(path)]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["entries"] == []
    assert main(["expand", "--config", str(path), "--n", "2"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert [entry["j"] for entry in data["entries"]] == [[2, -1, -1]]


def test_missing_config_file(temp_dir):
    assert main(["expand", "--config", str(temp_dir / "absent.json5")]) == EXIT_USAGE


def test_load_config_rejects_non_objects(temp_dir):
    path = temp_dir / "list.json5"
    path.write_text("[1, 2]", encoding="utf-8")
    with pytest.raises(UsageError):
        load_config(str(path))
    path.write_text("{ 'max-degree': 3 }", encoding="utf-8")
    assert load_config(str(path)) == {"max_degree": 3}


def test_max_workers_from_environment():
    assert max_workers({"HEXF_THREADS": "2"}) == 2
    assert 1 <= max_workers({}) <= 4
    for raw in ("0", "two"):
        with pytest.raises(UsageError):
            max_workers({"HEXF_THREADS": raw})


def test_run_config_precedence():
    args = argparse.Namespace(command="expand", config=None, verbose=False, quiet=False, seed=None,
                              format="json", out=None, f="cone", n=None, grid=None, prune=None)
    config = RunConfig.from_args(args, {"n": 3, "prune": 1e-13}, environ={})
    assert config.params["n"] == 3
    assert config.params["f"] == "cone"
    assert config.output_format == "json"
    assert config.seed == 0


def test_validator_coerces_and_collects():
    config = RunConfig("summab", {"f": "cone", "method": "eta", "ns": "4, 8", "p": "inf"}, workers=1)
    validated = RunConfigValidator().validate(config)
    assert validated.params["ns"] == [4, 8]
    assert math.isinf(validated.params["p"])

    bad = RunConfig("summab", {"ns": "4,x", "p": "0.5"}, output_format="parquet", workers=1)
    with pytest.raises(UsageError) as excinfo:
        RunConfigValidator().validate(bad)
    message = str(excinfo.value)
    for fragment in ("'f' is required", "'method' is required", "'ns'", "'p'", "parquet output needs --out"):
        assert fragment in message
