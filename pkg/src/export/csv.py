import logging
import re
from pathlib import Path
from typing import TextIO, Union

import pandas as pd

from src.errors import UsageError
from src.export.types import ExportPayload
from src.quadrature import GridFunction

logger = logging.getLogger(__name__)

FLOAT_FORMAT = "%.17g"

GRID_SIZE_LINE = re.compile(r"^#\s*N=(\d+)\s*$")


def write_csv(payload: ExportPayload, header: str, stream: TextIO):
    """Header comment line, then the frame with '.' decimals and 17 significant digits."""
    logger.debug(f"Writing {payload.name} as CSV ({len(payload.frame)} rows)")
    stream.write(f"# {header}\n")
    for line in payload.preamble:
        stream.write(f"# {line}\n")
    payload.frame.to_csv(stream, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")


def read_grid_csv(source: Union[str, Path, TextIO]) -> GridFunction:
    """Read a GridFunction written by write_csv: '# N=<N>' line, then rows a,b,re,im."""
    if isinstance(source, (str, Path)):
        with open(source, "r", encoding="utf-8") as f:
            return read_grid_csv(f)

    comments = []
    position = source.tell()
    line = source.readline()
    while line.startswith("#"):
        comments.append(line.strip())
        position = source.tell()
        line = source.readline()
    source.seek(position)

    sizes = [int(m.group(1)) for m in map(GRID_SIZE_LINE.match, comments) if m]
    if not sizes:
        raise UsageError("Grid function CSV has no '# N=<N>' line")
    frame = pd.read_csv(source, float_precision="round_trip")
    missing = {"a", "b", "re", "im"} - set(frame.columns)
    if missing:
        raise UsageError(f"Grid function CSV lacks column(s): {', '.join(sorted(missing))}")
    return GridFunction.from_frame(frame, sizes[0])
