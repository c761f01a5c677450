"""
Fourier coefficients, synthesis and the summability operators.

Every shift-invariant operator is applied in coefficient space as a
multiplier depending on the hexagonal degree. `convolve` and
`jackson_quadrature` evaluate the defining integrals directly and serve as
independent checks.
"""

import logging
from math import ceil
from typing import Optional, Sequence

import numpy as np
from scipy.special import binom

from src.errors import UsageError
from src.hexcoords import HexPoint
from src.kernels import cesaro_weights, eta_weights, jackson_kernel
from src.operators.types import CoeffTable, SummabilityMethod
from src.operators.utils import analysis, pointwise, synthesis
from src.quadrature import (
    OMEGA_AREA,
    GridFunction,
    HexFunction,
    check_grid,
    grid_points,
    required_grid_size,
    sample,
    sample_points,
)

logger = logging.getLogger(__name__)


def coefficients_from_grid(g: GridFunction, n: int) -> CoeffTable:
    """Coefficients over H_n of the sampled function."""
    if n < 0:
        raise UsageError(f"Coefficient degree must be non-negative, got {n}")
    check_grid(g.N, n)
    return CoeffTable.from_dense(analysis(g.values, n), n, grid_N=g.N)


def coefficients(f: HexFunction, n: int, N: Optional[int] = None) -> CoeffTable:
    """Fourier coefficients of f over H_n.

    Args:
        f: H-periodic function of a HexPoint.
        n: Degree of the index set.
        N: Sampling grid, at least 2n+1 (the default). Exact for f in H_n;
            otherwise the result carries the aliasing of this grid.
    """
    if n < 0:
        raise UsageError(f"Coefficient degree must be non-negative, got {n}")
    if N is None:
        N = required_grid_size(n)
    logger.debug(f"Extracting coefficients of degree {n} on grid N={N}")
    return coefficients_from_grid(sample(f, N), n)


def evaluate(c: CoeffTable, t: HexPoint) -> np.ndarray:
    """Sum of c_j phi_j(t)."""
    if len(c) == 0:
        return np.zeros(t.shape, dtype=complex)
    return pointwise(c.to_dense(), t)


def synthesize(c: CoeffTable, N: int) -> GridFunction:
    """Values of the series on the N x N cell grid."""
    if len(c) == 0:
        return GridFunction(N, np.zeros((N, N)))
    return GridFunction(N, synthesis(c.to_dense(), N))


def restrict(c: CoeffTable, n: int) -> CoeffTable:
    return c.select(c.degrees <= n)


def radial_multiplier(c: CoeffTable, weights: Sequence[float]) -> CoeffTable:
    """Multiply entry j by weights[|j|_H]; entries beyond the last weight are dropped."""
    weights = np.asarray(weights, dtype=float)
    kept = restrict(c, len(weights) - 1)
    return kept.with_values(kept.values * weights[kept.degrees])


def partial_sum(c: CoeffTable, n: int) -> CoeffTable:
    """S_n: restriction to H_n."""
    if n < 0:
        raise UsageError(f"Partial sum degree must be non-negative, got {n}")
    return restrict(c, n)


def cesaro_means(c: CoeffTable, n: int, delta: float) -> CoeffTable:
    """(C, delta) means S_n^delta."""
    if delta < 0:
        raise UsageError(f"Cesaro means need delta >= 0, got {delta}")
    return radial_multiplier(c, cesaro_weights(n, delta))


def abel_means(c: CoeffTable, r: float) -> CoeffTable:
    """Poisson means P_r: entry j scaled by r^{|j|_H}."""
    if not 0 <= r < 1:
        raise UsageError(f"Abel means need 0 <= r < 1, got {r}")
    return c.with_values(c.values * r ** c.degrees.astype(float))


def smoothed_cutoff(c: CoeffTable, n: int) -> CoeffTable:
    """eta_n f: weight eta(|j|_H / n), so H_n is reproduced and the result lies in H_{2n}."""
    return radial_multiplier(c, eta_weights(n))


def default_rho(r: int) -> int:
    return int(ceil((r + 2) / 2))


def _check_jackson(n: int, r: int, rho: int):
    if r < 1:
        raise UsageError(f"Jackson operator needs r >= 1, got {r}")
    if rho < default_rho(r):
        raise UsageError(f"Jackson operator needs rho >= {default_rho(r)} for r={r}, got {rho}")
    if n < rho:
        raise UsageError(f"Jackson operator needs n >= rho = {rho}, got {n}")


def jackson_degree(n: int, rho: int) -> int:
    """Order n* of the kernel K_{n*, rho}; its degree 2 rho n* does not exceed n.

    For rho <= n < 2 rho this is 0 and the kernel is the constant 1/|Omega|.
    """
    n_star = n // (2 * rho)
    if n_star == 0:
        logger.debug(f"Jackson kernel for n={n}, rho={rho} reduces to the constant")
    return n_star


def jackson_kernel_table(n: int, rho: int) -> CoeffTable:
    """Coefficients of the Jackson kernel J = K_{n*, rho} used by F_n^{rho, r}."""
    n_star = jackson_degree(n, rho)
    degree = 2 * rho * n_star
    return coefficients(lambda t: jackson_kernel(n_star, rho, t), degree)


def jackson_multiplier(n: int, r: int, rho: Optional[int] = None) -> CoeffTable:
    """Exact coefficient multiplier m(j) of F_n^{rho, r} over H_n.

    m(j) = |Omega| * sum_k (-1)^(k-1) C(r, k) Jhat(k j); J is even, so the
    sign of the frequency does not matter.
    """
    if rho is None:
        rho = default_rho(r)
    _check_jackson(n, r, rho)
    kernel = jackson_kernel_table(n, rho)
    d = kernel.max_degree
    dense = kernel.to_dense(d)
    template = CoeffTable.from_dense(np.zeros((2 * n + 1, 2 * n + 1)), n)
    multiplier = np.zeros(len(template))
    for k in range(1, r + 1):
        a = k * template.j1
        b = k * template.j2
        inside = np.maximum(np.maximum(np.abs(a), np.abs(b)), np.abs(a + b)) <= d
        hat = np.zeros(len(template))
        hat[inside] = dense[a[inside] + d, b[inside] + d].real
        multiplier += (-1) ** (k - 1) * binom(r, k) * OMEGA_AREA * hat
    return template.with_values(multiplier)


def jackson_op(f: HexFunction, n: int, r: int, rho: Optional[int] = None,
               N: Optional[int] = None) -> CoeffTable:
    """Coefficients of the Jackson operator F_n^{rho, r} f, an element of H_n.

    Args:
        f: H-periodic function.
        n: Target degree, at least rho.
        r: Order of the difference.
        rho: Kernel power, at least ceil((r+2)/2) (the default).
        N: Grid for the coefficients of f; defaults to 4n+1.
    """
    if rho is None:
        rho = default_rho(r)
    _check_jackson(n, r, rho)
    if N is None:
        N = 4 * n + 1
    c = coefficients(f, n, N)
    multiplier = jackson_multiplier(n, r, rho)
    return c.with_values(c.values * multiplier.values)


def derivative(c: CoeffTable, alpha: Sequence[int]) -> CoeffTable:
    """Partial derivative d^alpha in homogeneous coordinates."""
    alpha = tuple(int(a) for a in alpha)
    if len(alpha) != 3 or min(alpha) < 0:
        raise UsageError(f"Derivative order must be three non-negative integers, got {alpha}")
    factor = (2j * np.pi / 3) ** sum(alpha)
    monomial = (c.j1.astype(float) ** alpha[0]
                * c.j2.astype(float) ** alpha[1]
                * c.j3.astype(float) ** alpha[2])
    return c.with_values(c.values * factor * monomial)


def convolve(f: HexFunction, kernel: HexFunction, x: HexPoint, N: int) -> np.ndarray:
    """(1/|Omega|) * integral of f(x - t) K(t) dt, by the N x N grid rule, at each point of x."""
    nodes = grid_points(N)
    k_values = sample_points(kernel, nodes).ravel()
    x1 = np.ravel(x.t1)
    x2 = np.ravel(x.t2)
    out = np.empty(len(x1), dtype=complex)
    for i in range(len(x1)):
        shifted = HexPoint(x1[i] - nodes.t1, x2[i] - nodes.t2)
        out[i] = np.mean(sample_points(f, shifted).ravel() * k_values)
    return out.reshape(x.shape)


def jackson_quadrature(f: HexFunction, x: HexPoint, n: int, r: int,
                       rho: Optional[int] = None, N: Optional[int] = None) -> np.ndarray:
    """F_n^{rho, r} f at x from its defining integral over the hexagon."""
    if rho is None:
        rho = default_rho(r)
    _check_jackson(n, r, rho)
    n_star = jackson_degree(n, rho)
    if N is None:
        N = required_grid_size(2 * rho * n_star + r * n)
    nodes = grid_points(N)
    j_values = jackson_kernel(n_star, rho, nodes).ravel()
    x1 = np.ravel(x.t1)
    x2 = np.ravel(x.t2)
    out = np.empty(len(x1), dtype=complex)
    for i in range(len(x1)):
        total = np.zeros(N * N, dtype=complex)
        for k in range(1, r + 1):
            shifted = HexPoint(x1[i] + k * nodes.t1, x2[i] + k * nodes.t2)
            total += (-1) ** (k - 1) * binom(r, k) * sample_points(f, shifted).ravel()
        out[i] = OMEGA_AREA * np.mean(j_values * total)
    return out.reshape(x.shape)


def apply_method(method: SummabilityMethod, f: HexFunction, n: int,
                 N: Optional[int] = None) -> CoeffTable:
    """Coefficients of the degree-n approximant of f produced by `method`.

    Coefficients of f are taken on a grid of size N, by default 4n+1 (at
    least 65), so every operator sees the same aliasing.
    """
    if n < 0:
        raise UsageError(f"Degree must be non-negative, got {n}")
    if N is None:
        N = max(4 * n + 1, 65)
    kind = method.kind
    if kind == "jackson":
        return jackson_op(f, n, int(method.r), method.rho, N)
    if kind == "eta":
        if n < 1:
            raise UsageError(f"eta needs n >= 1, got {n}")
        return smoothed_cutoff(coefficients(f, 2 * n, N), n)
    c = coefficients(f, n, N)
    if kind == "dirichlet":
        return partial_sum(c, n)
    if kind == "cesaro":
        return cesaro_means(c, n, method.delta)
    r = method.r if method.r is not None else (1.0 - 1.0 / n if n > 0 else 0.0)
    return abel_means(c, r)
