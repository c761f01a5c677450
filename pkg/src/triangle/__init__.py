from .types import CosineCoeffTable, TriIndex
from .utils import DeltaQuadrature
from .core import (
    check_compatibility,
    cosine_cesaro1,
    cosine_coeffs,
    cosine_gram,
    evaluate_cosine,
    extend_symmetric,
    hexagon_cesaro1,
    orbit,
    project_sym,
    reduce_to_delta,
    tc,
    to_hex_table,
    triangle_indices,
    ts,
)

__all__ = [
    "CosineCoeffTable",
    "DeltaQuadrature",
    "TriIndex",
    "check_compatibility",
    "cosine_cesaro1",
    "cosine_coeffs",
    "cosine_gram",
    "evaluate_cosine",
    "extend_symmetric",
    "hexagon_cesaro1",
    "orbit",
    "project_sym",
    "reduce_to_delta",
    "tc",
    "to_hex_table",
    "triangle_indices",
    "ts",
]
