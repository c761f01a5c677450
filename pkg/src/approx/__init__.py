from .types import ExperimentReport, ModulusSpec
from .core import (
    SAMPLING_SLACK,
    bernstein_ratio,
    bernstein_sweep,
    best_approx_l2,
    corollary_rate_check,
    cutoff_norm,
    derivative_bound,
    direct_check,
    directions,
    finite_difference,
    format_p,
    inverse_check,
    l1_growth,
    lebesgue_constant,
    lebesgue_sweep,
    modulus,
    moment_sweep,
    near_best,
    random_table,
    theta_l1,
)

__all__ = [
    "ExperimentReport",
    "ModulusSpec",
    "SAMPLING_SLACK",
    "bernstein_ratio",
    "bernstein_sweep",
    "best_approx_l2",
    "corollary_rate_check",
    "cutoff_norm",
    "derivative_bound",
    "direct_check",
    "directions",
    "finite_difference",
    "format_p",
    "inverse_check",
    "l1_growth",
    "lebesgue_constant",
    "lebesgue_sweep",
    "modulus",
    "moment_sweep",
    "near_best",
    "random_table",
    "theta_l1",
]
