import numpy as np
from scipy.special import binom

from src.errors import UsageError
from src.hexcoords import HexPoint, degree_of, index_arrays, t_to_s

# Below this |sin| a Dirichlet ratio switches to its series about the limit.
RATIO_LIMIT_TOL = 1e-7

# Upper bound on points x indices per block in brute-force sums.
_BLOCK = 2_000_000


def dirichlet_ratio(n: int, v: np.ndarray) -> np.ndarray:
    """sin((n+1) pi v) / sin(pi v), stable at and near integer v."""
    v = np.asarray(v, dtype=float)
    m = np.rint(v)
    x = np.pi * (v - m)
    sign = np.where(np.mod(n * m, 2) == 0, 1.0, -1.0)
    sin_x = np.sin(x)
    small = np.abs(sin_x) < RATIO_LIMIT_TOL
    limit = (n + 1) * (1 - ((n + 1) ** 2 - 1) * x ** 2 / 6)
    ratio = np.sin((n + 1) * x) / np.where(small, 1.0, sin_x)
    return sign * np.where(small, limit, ratio)


def radial_series(weights: np.ndarray, t: HexPoint) -> np.ndarray:
    """Brute-force sum of weights[|j|_H] * phi_j(t) over j in H_K, K = len(weights) - 1.

    The weights depend on the degree only, so the sine parts cancel in
    pairs +-j and the cosine form is summed directly.
    """
    weights = np.asarray(weights, dtype=float)
    K = len(weights) - 1
    j1, j2 = index_arrays(K)
    w = weights[degree_of(j1, j2)]
    s1, s2 = t_to_s(t)
    s1 = np.ravel(s1)
    s2 = np.ravel(s2)
    out = np.empty(s1.shape)
    step = max(1, _BLOCK // len(w))
    for start in range(0, len(s1), step):
        stop = start + step
        phase = 2 * np.pi * (np.outer(s1[start:stop], j1) + np.outer(s2[start:stop], j2))
        out[start:stop] = np.cos(phase) @ w
    return out.reshape(t.shape)


def cesaro_weights(n: int, delta: float) -> np.ndarray:
    """Cesaro multipliers A^delta_{n-k} / A^delta_n for k = 0..n."""
    if n < 0:
        raise UsageError(f"Cesaro order needs n >= 0, got {n}")
    if not delta > -1:
        raise UsageError(f"Cesaro index needs delta > -1, got {delta}")
    k = np.arange(n + 1)
    return binom(n - k + delta, delta) / binom(n + delta, delta)


def eta_cutoff(u):
    """C-infinity cutoff: 1 on (-inf, 1], 0 on [2, inf), strictly decreasing between."""
    u = np.asarray(u, dtype=float)

    def bump(x):
        positive = x > 0
        return np.where(positive, np.exp(-1.0 / np.where(positive, x, 1.0)), 0.0)

    left = bump(2.0 - u)
    right = bump(u - 1.0)
    return left / (left + right)


def eta_weights(n: int) -> np.ndarray:
    """eta(k/n) for k = 0..2n."""
    if n < 1:
        raise UsageError(f"Smoothed cutoff needs n >= 1, got {n}")
    return eta_cutoff(np.arange(2 * n + 1) / n)


def second_difference(weights: np.ndarray) -> np.ndarray:
    """w_k - 2 w_{k+1} + w_{k+2}, with w vanishing past the end."""
    padded = np.concatenate([np.asarray(weights, dtype=float), [0.0, 0.0]])
    return padded[:-2] - 2 * padded[1:-1] + padded[2:]
