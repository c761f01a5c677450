from .types import GridFunction
from .core import (
    OMEGA_AREA,
    HexFunction,
    check_grid,
    delta_nodes,
    gaussian_transform,
    grid_points,
    inner_product_H,
    inner_product_delta,
    lp_norm,
    lp_norm_values,
    mean_integral,
    required_grid_size,
    sample,
    sample_points,
)

__all__ = [
    "GridFunction",
    "OMEGA_AREA",
    "HexFunction",
    "check_grid",
    "delta_nodes",
    "gaussian_transform",
    "grid_points",
    "inner_product_H",
    "inner_product_delta",
    "lp_norm",
    "lp_norm_values",
    "mean_integral",
    "required_grid_size",
    "sample",
    "sample_points",
]
