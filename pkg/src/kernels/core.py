"""
Closed-form and series evaluation of the summability kernels on the hexagon.

Every kernel is a real, A2-invariant, H-periodic function of a HexPoint
(scalar or array). Closed forms are evaluated through the Dirichlet-type
ratio in kernels.utils, whose singular factors use their analytic limits.
"""

import logging
import threading
from typing import Dict, Optional, Tuple

import numpy as np
from scipy.special import binom

from src.errors import UsageError
from src.hexcoords import HexPoint, euclid_norm, reduce_to_omega
from src.kernels.types import KernelKind, KernelSpec
from src.kernels.utils import (
    cesaro_weights,
    dirichlet_ratio,
    eta_weights,
    radial_series,
    second_difference,
)
from src.quadrature import OMEGA_AREA, grid_points, mean_integral, required_grid_size, sample

logger = logging.getLogger(__name__)

CESARO2_SINGULAR_TOL = 1e-6

_lambda_cache: Dict[Tuple[int, int], float] = {}
_lambda_lock = threading.Lock()


def _check_n(n: int, minimum: int = 0):
    if n < minimum:
        raise UsageError(f"Kernel order must satisfy n >= {minimum}, got {n}")


def _check_r(r: float):
    if not 0 <= r < 1:
        raise UsageError(f"Poisson parameter must satisfy 0 <= r < 1, got {r}")


def _theta(n: int, t: HexPoint) -> np.ndarray:
    if n < 0:
        return np.zeros(t.shape)
    t1, t2, t3 = t.as_triple()
    return (dirichlet_ratio(n, (t1 - t2) / 3)
            * dirichlet_ratio(n, (t2 - t3) / 3)
            * dirichlet_ratio(n, (t3 - t1) / 3))


def theta(n: int, t: HexPoint) -> np.ndarray:
    """Theta_n = sum of D_k for k <= n, as a product of three sine ratios."""
    _check_n(n)
    return _theta(n, t)


def dirichlet(n: int, t: HexPoint) -> np.ndarray:
    """D_n = Theta_n - Theta_{n-1}."""
    _check_n(n)
    return _theta(n, t) - _theta(n - 1, t)


def dirichlet_series(n: int, t: HexPoint) -> np.ndarray:
    """D_n by direct summation over H_n."""
    _check_n(n)
    return radial_series(np.ones(n + 1), t)


def shell_kernel(weights: np.ndarray, t: HexPoint) -> np.ndarray:
    """sum_k weights[k] (D_k - D_{k-1}) through closed-form Theta values.

    Summation by parts turns the shell sum into sum_k Theta_k times the
    second difference of the weights.
    """
    coeffs = second_difference(weights)
    total = np.zeros(t.shape)
    for k, c in enumerate(coeffs):
        if c != 0.0:
            total = total + c * _theta(k, t)
    return total


def poisson_q(r: float, u):
    """q(r, u) = 1 - 2 r cos u + r^2."""
    _check_r(r)
    return 1 - 2 * r * np.cos(u) + r * r


def poisson_kernel(r: float, t: HexPoint) -> np.ndarray:
    """Closed-form Poisson kernel P(r; t); a sum of nonnegative terms."""
    _check_r(r)
    t1, t2, t3 = t.as_triple()
    q12 = poisson_q(r, 2 * np.pi * (t1 - t2) / 3)
    q23 = poisson_q(r, 2 * np.pi * (t2 - t3) / 3)
    q31 = poisson_q(r, 2 * np.pi * (t3 - t1) / 3)
    leading = (1 - r) ** 3 * (1 - r ** 3) / (q12 * q23 * q31)
    pairs = 1 / (q12 * q23) + 1 / (q23 * q31) + 1 / (q31 * q12)
    return leading + r * (1 - r) ** 2 * pairs


def poisson_series(r: float, t: HexPoint, M: int) -> np.ndarray:
    """Poisson kernel truncated after shell M."""
    _check_r(r)
    return radial_series(r ** np.arange(M + 1), t)


def cesaro_kernel(n: int, delta: float, t: HexPoint) -> np.ndarray:
    """(C, delta) kernel as its coefficient sum over H_n."""
    return radial_series(cesaro_weights(n, delta), t)


def cesaro2_closed(n: int, t: HexPoint, singular_tol: float = CESARO2_SINGULAR_TOL) -> np.ndarray:
    """(C, 2) kernel from the (A_n^2 + B_n^2) closed form.

    Points where any sin((ti - tj) pi / 3) falls below `singular_tol` are
    evaluated through the coefficient sum instead.
    """
    _check_n(n)
    t1 = np.ravel(t.t1)
    t2 = np.ravel(t.t2)
    t3 = -t1 - t2
    d = [np.pi * (t2 - t3) / 3, np.pi * (t3 - t1) / 3, np.pi * (t1 - t2) / 3]
    angles = [np.pi * t1 / 3, np.pi * t2 / 3, np.pi * t3 / 3]
    sines = [np.sin(x) for x in d]
    singular = np.zeros(t1.shape, dtype=bool)
    for s in sines:
        singular |= np.abs(s) < singular_tol

    a = sum(np.cos(n * angle) * np.sin((n + 2) * dd) for angle, dd in zip(angles, d))
    b = sum(np.sin(n * angle) * np.sin((n + 2) * dd) for angle, dd in zip(angles, d))
    denominator = 16 * (sines[0] * sines[1] * sines[2]) ** 2
    with np.errstate(divide="ignore", invalid="ignore"):
        value = (a * a + b * b) / denominator / binom(n + 2, 2)

    if np.any(singular):
        logger.debug(f"cesaro2_closed(n={n}): {int(np.sum(singular))} point(s) on the coefficient-sum path")
        fallback = cesaro_kernel(n, 2, HexPoint(t1[singular], t2[singular]))
        value = np.where(singular, 0.0, value)
        value[singular] = fallback
    return value.reshape(t.shape)


def jackson_lambda(n: int, r: int) -> float:
    """Normalization making the Jackson kernel integrate to 1 over the hexagon.

    The integral of Theta_n^{2r} is exact on the grid N = 2(2rn)+1. Values
    are computed once per (n, r) and cached.
    """
    _check_n(n)
    if r < 1:
        raise UsageError(f"Jackson power needs r >= 1, got {r}")
    key = (n, r)
    with _lambda_lock:
        if key not in _lambda_cache:
            N = required_grid_size(2 * r * n)
            mean = mean_integral(sample(lambda t: theta(n, t) ** (2 * r), N)).real
            _lambda_cache[key] = 1.0 / (OMEGA_AREA * mean)
            logger.debug(f"jackson_lambda(n={n}, r={r}) computed on N={N}")
        return _lambda_cache[key]


def jackson_kernel(n: int, r: int, t: HexPoint) -> np.ndarray:
    return jackson_lambda(n, r) * theta(n, t) ** (2 * r)


def jackson_moment(n: int, r: int, nu: float, N: Optional[int] = None) -> float:
    """Integral over the hexagon of ||t||^nu K_{n,r}(t).

    ||t|| is taken at the hexagon representative of each grid point, so the
    integrand is periodic and the cell grid covers the hexagon once.
    """
    if N is None:
        N = max(4 * 2 * r * n + 1, 65)
    points = grid_points(N)
    radius = euclid_norm(reduce_to_omega(points))
    values = radius ** nu * jackson_kernel(n, r, points)
    return float(OMEGA_AREA * np.mean(values))


def eta_kernel(n: int, t: HexPoint) -> np.ndarray:
    """Smoothed cutoff kernel: shells k <= 2n weighted by eta(k/n)."""
    return shell_kernel(eta_weights(n), t)


def evaluate_kernel(spec: KernelSpec, t: HexPoint) -> np.ndarray:
    """Evaluate the kernel described by `spec` at t."""
    kind = spec.kind
    if kind is KernelKind.DIRICHLET:
        return dirichlet(spec.n, t)
    if kind is KernelKind.THETA:
        return theta(spec.n, t)
    if kind is KernelKind.POISSON:
        return poisson_kernel(spec.r, t)
    if kind is KernelKind.CESARO:
        return cesaro_kernel(spec.n, spec.delta, t)
    if kind is KernelKind.CESARO2:
        return cesaro2_closed(spec.n, t)
    if kind is KernelKind.JACKSON:
        return jackson_kernel(spec.n, spec.r, t)
    if kind is KernelKind.ETA:
        return eta_kernel(spec.n, t)
    raise UsageError(f"Unknown kernel kind: {kind}")
