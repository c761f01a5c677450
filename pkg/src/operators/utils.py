import numpy as np

from src.hexcoords import HexPoint, t_to_s

_BLOCK = 4096


def analysis(values: np.ndarray, n: int) -> np.ndarray:
    """Grid coefficients c[j1+n, j2+n] = mean(values * conj(phi_j)) by separable matrix products."""
    N = values.shape[0]
    k = np.arange(-n, n + 1)
    F = np.exp(-2j * np.pi * np.outer(np.arange(N), k) / N)
    return F.T @ values @ F / (N * N)


def synthesis(dense: np.ndarray, N: int) -> np.ndarray:
    """Values on the N x N cell grid of the series with dense coefficients."""
    n = (dense.shape[0] - 1) // 2
    k = np.arange(-n, n + 1)
    G = np.exp(2j * np.pi * np.outer(np.arange(N), k) / N)
    return G @ dense @ G.T


def pointwise(dense: np.ndarray, t: HexPoint) -> np.ndarray:
    """Values of the series with dense coefficients at arbitrary points."""
    n = (dense.shape[0] - 1) // 2
    k = np.arange(-n, n + 1)
    s1, s2 = t_to_s(t)
    s1 = np.ravel(s1)
    s2 = np.ravel(s2)
    out = np.empty(s1.shape, dtype=complex)
    for start in range(0, len(s1), _BLOCK):
        stop = start + _BLOCK
        E1 = np.exp(2j * np.pi * np.outer(s1[start:stop], k))
        E2 = np.exp(2j * np.pi * np.outer(s2[start:stop], k))
        out[start:stop] = np.sum((E1 @ dense) * E2, axis=1)
    return out.reshape(t.shape)
