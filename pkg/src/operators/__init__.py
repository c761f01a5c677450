from .types import CoeffTable, SummabilityMethod
from .core import (
    abel_means,
    apply_method,
    cesaro_means,
    coefficients,
    coefficients_from_grid,
    convolve,
    default_rho,
    derivative,
    evaluate,
    jackson_degree,
    jackson_kernel_table,
    jackson_multiplier,
    jackson_op,
    jackson_quadrature,
    partial_sum,
    radial_multiplier,
    restrict,
    smoothed_cutoff,
    synthesize,
)

__all__ = [
    "CoeffTable",
    "SummabilityMethod",
    "abel_means",
    "apply_method",
    "cesaro_means",
    "coefficients",
    "coefficients_from_grid",
    "convolve",
    "default_rho",
    "derivative",
    "evaluate",
    "jackson_degree",
    "jackson_kernel_table",
    "jackson_multiplier",
    "jackson_op",
    "jackson_quadrature",
    "partial_sum",
    "radial_multiplier",
    "restrict",
    "smoothed_cutoff",
    "synthesize",
]
