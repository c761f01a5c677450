import json
import logging
from pathlib import Path

import pyarrow as pa
import pyarrow.parquet as pq

from src.export.types import ExportPayload

logger = logging.getLogger(__name__)

HEADER_KEY = b"hexharmonic.header"
SUMMARY_KEY = b"hexharmonic.summary"


def write_parquet(payload: ExportPayload, header: str, output_path: Path):
    """Write the frame; header and summary go into the schema metadata."""
    logger.debug(f"Writing {payload.name} as Parquet to {output_path}")
    table = pa.Table.from_pandas(payload.frame, preserve_index=False)
    metadata = dict(table.schema.metadata or {})
    metadata[HEADER_KEY] = header.encode("utf-8")
    metadata[SUMMARY_KEY] = json.dumps(payload.summary, default=str).encode("utf-8")
    table = table.replace_schema_metadata(metadata)
    pq.write_table(table, output_path)


def read_header(path: Path) -> str:
    schema = pq.read_schema(path)
    return schema.metadata[HEADER_KEY].decode("utf-8")
