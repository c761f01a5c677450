import logging
import sys
from pathlib import Path
from typing import Optional, TextIO

from src import __version__
from src.errors import UsageError
from src.export.csv import write_csv
from src.export.jsonfile import write_json
from src.export.markdown import write_markdown
from src.export.parquet import write_parquet
from src.export.types import ExportPayload

logger = logging.getLogger(__name__)

TEXT_WRITERS = {
    "csv": write_csv,
    "json": write_json,
    "md": write_markdown,
}


def make_header(invocation: str) -> str:
    return f"hexharmonic {__version__}: {invocation}".rstrip()


class Exporter:
    """Writes ExportPayloads in one output format."""

    def __init__(self, output_format: str, invocation: str = ""):
        """
        Initialize the Exporter.

        Args:
            output_format: One of csv, json, parquet, md.
            invocation: Command line recorded in the header of every output.
        """
        if output_format not in TEXT_WRITERS and output_format != "parquet":
            raise UsageError(f"Unsupported format: {output_format}. Supported formats: csv, json, parquet, md")
        self.output_format = output_format
        self.header = make_header(invocation)

    def write(self, payload: ExportPayload, out: Optional[str] = None,
              stream: Optional[TextIO] = None) -> Optional[Path]:
        """
        Write `payload` to the file `out`, or to `stream` (default stdout) when out is None.

        Returns:
            The output path, or None when written to a stream.
        """
        if self.output_format == "parquet":
            if out is None:
                raise UsageError("parquet output needs an output path")
            output_path = Path(out)
            output_path.parent.mkdir(parents=True, exist_ok=True)
            write_parquet(payload, self.header, output_path)
            logger.info(f"Successfully wrote {payload.name} to {output_path}")
            return output_path

        writer = TEXT_WRITERS[self.output_format]
        if out is None:
            writer(payload, self.header, stream or sys.stdout)
            return None

        output_path = Path(out)
        output_path.parent.mkdir(parents=True, exist_ok=True)
        with open(output_path, "w", encoding="utf-8", newline="") as f:
            writer(payload, self.header, f)
        logger.info(f"Successfully wrote {payload.name} to {output_path}")
        return output_path
