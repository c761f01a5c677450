from .types import KernelKind, KernelSpec
from .utils import cesaro_weights, dirichlet_ratio, eta_cutoff, eta_weights, radial_series
from .core import (
    cesaro2_closed,
    cesaro_kernel,
    dirichlet,
    dirichlet_series,
    eta_kernel,
    evaluate_kernel,
    jackson_kernel,
    jackson_lambda,
    jackson_moment,
    poisson_kernel,
    poisson_q,
    poisson_series,
    shell_kernel,
    theta,
)

__all__ = [
    "KernelKind",
    "KernelSpec",
    "cesaro2_closed",
    "cesaro_kernel",
    "cesaro_weights",
    "dirichlet",
    "dirichlet_ratio",
    "dirichlet_series",
    "eta_cutoff",
    "eta_kernel",
    "eta_weights",
    "evaluate_kernel",
    "jackson_kernel",
    "jackson_lambda",
    "jackson_moment",
    "poisson_kernel",
    "poisson_q",
    "poisson_series",
    "radial_series",
    "shell_kernel",
    "theta",
]
