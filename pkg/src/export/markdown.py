import logging
import math
from typing import Any, TextIO

from src.export.types import ExportPayload

logger = logging.getLogger(__name__)

MAX_ROWS = 200


def _cell(value: Any) -> str:
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        return f"{value:.6g}"
    return str(value)


def write_markdown(payload: ExportPayload, header: str, stream: TextIO):
    """Markdown summary: header line, key results, then the row table."""
    logger.debug(f"Writing {payload.name} as Markdown")
    stream.write(f"# {header}\n\n")
    stream.write(f"## {payload.name.capitalize()} Report\n\n")
    stream.write(f"**Rows**: {len(payload.frame)}\n\n")

    if payload.summary:
        stream.write("## 📊 Summary\n\n")
        for key, value in payload.summary.items():
            stream.write(f"- **{key}**: {_cell(value)}\n")
        stream.write("\n")

    if payload.notes:
        stream.write("## ⚠️ Notes\n\n")
        for note in payload.notes:
            stream.write(f"- {note}\n")
        stream.write("\n")

    if len(payload.frame):
        columns = list(payload.frame.columns)
        stream.write("## Results\n\n")
        stream.write("| " + " | ".join(columns) + " |\n")
        stream.write("|" + "|".join("---" for _ in columns) + "|\n")
        for row in payload.frame.head(MAX_ROWS).itertuples(index=False):
            stream.write("| " + " | ".join(_cell(v) for v in row) + " |\n")
        if len(payload.frame) > MAX_ROWS:
            stream.write(f"\n*{len(payload.frame) - MAX_ROWS} more row(s) omitted; use csv or parquet.*\n")
