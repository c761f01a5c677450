"""
Grid quadrature on the periodic cell and midpoint-type quadrature on the triangle.

Hexagon integrals are computed as equal-weight means over the N x N cell
grid; this is exact for trigonometric polynomials with per-axis degree below N.
"""

import logging
from typing import Callable, Union

import numpy as np

from src.errors import UsageError
from src.hexcoords import HexPoint, s_to_t
from src.quadrature.types import GridFunction

logger = logging.getLogger(__name__)

# Area of the hexagon in (t1, t2) measure; the unit s-cell has Jacobian 3.
OMEGA_AREA = 3.0

HexFunction = Callable[[HexPoint], Union[complex, np.ndarray]]


def required_grid_size(degree: int) -> int:
    """Smallest grid that integrates products of two degree-`degree` polynomials exactly."""
    return 2 * degree + 1


def check_grid(N: int, degree: int):
    """Reject a grid too small for exact integration at `degree`."""
    if N < required_grid_size(degree):
        raise UsageError(
            f"Grid N={N} is too small for degree {degree}; need N >= {required_grid_size(degree)}"
        )


def grid_points(N: int) -> HexPoint:
    """HexPoint arrays of shape (N, N) for the cell grid (a/N, b/N)."""
    if N < 1:
        raise UsageError(f"Grid size must be at least 1, got {N}")
    a = np.arange(N) / N
    s1, s2 = np.meshgrid(a, a, indexing="ij")
    return s_to_t(s1, s2)


def sample_points(f: HexFunction, t: HexPoint) -> np.ndarray:
    """Evaluate f on an array of points, broadcasting constant results."""
    values = np.asarray(f(t), dtype=complex)
    return np.broadcast_to(values, t.shape).copy()


def sample(f: HexFunction, N: int) -> GridFunction:
    return GridFunction(N, sample_points(f, grid_points(N)))


def mean_integral(g: GridFunction) -> complex:
    """(1/|Omega|) times the integral over the hexagon."""
    return complex(np.mean(g.values))


def _check_p(p: float):
    if not p >= 1:
        raise UsageError(f"L^p exponent must satisfy p >= 1, got {p}")


def lp_norm_values(values: np.ndarray, p: float) -> float:
    """L^p norm of samples from an equal-weight rule over the hexagon."""
    _check_p(p)
    magnitude = np.abs(values)
    if np.isinf(p):
        return float(np.max(magnitude))
    return float((OMEGA_AREA * np.mean(magnitude ** p)) ** (1.0 / p))


def lp_norm(g: GridFunction, p: float) -> float:
    """Unnormalized L^p norm over the hexagon; p = inf gives the grid maximum."""
    return lp_norm_values(g.values, p)


def inner_product_H(f: GridFunction, g: GridFunction) -> complex:
    if f.N != g.N:
        raise UsageError(f"Grid sizes differ: {f.N} vs {g.N}")
    return complex(np.mean(f.values * np.conj(g.values)))


def delta_nodes(M: int) -> HexPoint:
    """Edge midpoints of the M^2 congruent sub-triangles of the triangle.

    Every sub-triangle contributes its three edge midpoints with equal
    weight, so shared midpoints appear twice. The rule is exact for
    quadratics on each sub-triangle.
    """
    if M < 1:
        raise UsageError(f"Subdivision level must be at least 1, got {M}")
    h = 1.0 / M
    a, b = np.meshgrid(np.arange(M), np.arange(M), indexing="ij")
    up = (a + b) <= M - 1
    down = (a + b) <= M - 2
    au, bu = a[up], b[up]
    ad, bd = a[down], b[down]
    t1 = np.concatenate([au + 0.5, au, au + 0.5, ad + 0.5, ad + 1.0, ad + 0.5])
    t2 = np.concatenate([bu, bu + 0.5, bu + 0.5, bd + 0.5, bd + 0.5, bd + 1.0])
    return HexPoint(t1 * h, t2 * h)


def inner_product_delta(f: HexFunction, g: HexFunction, M: int) -> complex:
    """<f, g> over the triangle, normalized so that <1, 1> = 1."""
    nodes = delta_nodes(M)
    return complex(np.mean(sample_points(f, nodes) * np.conj(sample_points(g, nodes))))


def gaussian_transform(j1: np.ndarray, j2: np.ndarray, sigma: float) -> np.ndarray:
    """Continuous transform of exp(-(t1^2+t2^2+t3^2)/sigma^2) at frequency j.

    The periodized Gaussian has Fourier coefficients equal to one third of this.
    """
    j1 = np.asarray(j1, dtype=float)
    j2 = np.asarray(j2, dtype=float)
    j3 = -j1 - j2
    a = j1 - j3
    b = j2 - j3
    return (np.pi * sigma ** 2 / np.sqrt(3.0)) * np.exp(
        -(2 * np.pi ** 2 * sigma ** 2 / 27.0) * (a ** 2 + b ** 2 - a * b)
    )
