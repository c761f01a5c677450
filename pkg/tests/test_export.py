"""
Unit tests for the export module.
"""

import io
import json
import math
import shutil
import tempfile
from pathlib import Path

import numpy as np
import pandas as pd
import pytest

from src import __version__
from src.approx import ExperimentReport
from src.errors import UsageError
from src.export import ExportPayload, Exporter, make_header, read_grid_csv, read_header
from src.quadrature import GridFunction
from src.registry import RandomPolynomial


@pytest.fixture
def temp_output_dir():
    """Create a temporary directory for output files."""
    temp_dir = tempfile.mkdtemp()
    yield Path(temp_dir)
    shutil.rmtree(temp_dir)


@pytest.fixture
def payload():
    frame = pd.DataFrame({"n": [4, 8], "value": [0.1, 1 / 3]})
    return ExportPayload("demo", frame, summary={"C": 2.5, "spread": math.nan}, notes=["h=0.5: vacuous"])


def _render(output_format, payload, invocation="hexharmonic demo"):
    stream = io.StringIO()
    Exporter(output_format, invocation).write(payload, stream=stream)
    return stream.getvalue()


def test_header_names_version_and_invocation():
    assert make_header("hexharmonic kernel --n 2") == f"hexharmonic {__version__}: hexharmonic kernel --n 2"


def test_csv_output(payload):
    """Header comment, column line, then rows with 17 significant digits."""
    lines = _render("csv", payload).splitlines()
    assert lines[0] == f"# hexharmonic {__version__}: hexharmonic demo"
    assert lines[1] == "n,value"
    assert lines[2] == "4,0.10000000000000001"
    assert float(lines[3].split(",")[1]) == 1 / 3


def test_json_output(payload):
    """Floats keep their exact value; non-finite values become strings."""
    payload.document = {"rows": payload.frame.to_dict(orient="records"), "extra": [math.inf, math.nan, 1 + 2j]}
    data = json.loads(_render("json", payload))
    assert data["header"].endswith("hexharmonic demo")
    assert data["rows"][1]["value"] == 1 / 3
    assert data["extra"] == ["inf", "nan", {"re": 1.0, "im": 2.0}]


def test_markdown_output(payload):
    text = _render("md", payload)
    assert text.startswith(f"# hexharmonic {__version__}")
    assert "## Demo Report" in text
    assert "- **C**: 2.5" in text
    assert "- **spread**: nan" in text
    assert "- h=0.5: vacuous" in text
    assert "| n | value |" in text


def test_markdown_caps_rows():
    frame = pd.DataFrame({"n": range(250)})
    text = _render("md", ExportPayload("long", frame))
    assert "50 more row(s) omitted" in text


def test_parquet_output(payload, temp_output_dir):
    """The frame round-trips and the header lives in the schema metadata."""
    path = temp_output_dir / "nested" / "demo.parquet"
    written = Exporter("parquet", "hexharmonic demo").write(payload, str(path))
    assert written == path
    pd.testing.assert_frame_equal(pd.read_parquet(path), payload.frame)
    assert read_header(path) == f"hexharmonic {__version__}: hexharmonic demo"


def test_parquet_needs_path(payload):
    with pytest.raises(UsageError):
        Exporter("parquet").write(payload)


def test_unsupported_format():
    with pytest.raises(UsageError):
        Exporter("xml")


def test_write_to_file(payload, temp_output_dir):
    path = temp_output_dir / "out" / "demo.csv"
    Exporter("csv", "hexharmonic demo").write(payload, str(path))
    assert path.read_text(encoding="utf-8").startswith("# hexharmonic")


def test_payload_from_report():
    report = ExperimentReport("demo", parameters={"ns": [4]})
    report.add_row(65, 0.0, n=4, ratio=1.5)
    report.constants["C"] = 1.5
    report.fitted["b"] = 0.25
    report.notes.append("note")
    payload = ExportPayload.from_report(report)
    assert payload.name == "demo"
    assert payload.summary == {"b": 0.25, "C": 1.5}
    assert payload.document["parameters"] == {"ns": [4]}
    assert list(payload.frame["ratio"]) == [1.5]
    assert payload.notes == ["note"]


def test_payload_from_table():
    table = RandomPolynomial(1).table
    payload = ExportPayload.from_table("expand", table)
    assert payload.summary == {"entries": 7}
    assert len(payload.frame) == 7
    assert len(payload.document["entries"]) == 7


def test_grid_function_csv_round_trip(temp_output_dir):
    """A grid written as csv carries its size line and reads back unchanged."""
    rng = np.random.default_rng(3)
    grid = GridFunction(5, rng.normal(size=(5, 5)) + 1j * rng.normal(size=(5, 5)))
    payload = ExportPayload.from_grid("grid", grid)
    text = _render("csv", payload)
    lines = text.splitlines()
    assert lines[1] == "# N=5"
    assert lines[2] == "a,b,re,im"
    assert len(lines) == 3 + 25
    np.testing.assert_array_equal(read_grid_csv(io.StringIO(text)).values, grid.values)

    path = temp_output_dir / "grid.csv"
    Exporter("csv", "hexharmonic demo").write(payload, out=str(path))
    restored = read_grid_csv(path)
    assert restored.N == 5
    np.testing.assert_array_equal(restored.values, grid.values)


def test_grid_function_csv_needs_size_line():
    text = "# hexharmonic demo\na,b,re,im\n0,0,1.0,0.0\n"
    with pytest.raises(UsageError):
        read_grid_csv(io.StringIO(text))
    with pytest.raises(UsageError):
        read_grid_csv(io.StringIO("# N=1\na,b,re\n0,0,1.0\n"))
