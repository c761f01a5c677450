import json
import logging
import math
from typing import Any, TextIO

import numpy as np

from src.export.types import ExportPayload

logger = logging.getLogger(__name__)


def _plain(value: Any) -> Any:
    """Convert numpy scalars and non-finite floats to JSON-safe values.

    Finite floats keep their shortest round-trip repr.
    """
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, np.ndarray):
        return [_plain(v) for v in value.tolist()]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isnan(value):
            return "nan"
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return value
    if isinstance(value, complex):
        return {"re": _plain(value.real), "im": _plain(value.imag)}
    return value


def write_json(payload: ExportPayload, header: str, stream: TextIO):
    logger.debug(f"Writing {payload.name} as JSON")
    document = {"header": header}
    document.update(_plain(payload.document))
    json.dump(document, stream, indent=2, ensure_ascii=False)
    stream.write("\n")
