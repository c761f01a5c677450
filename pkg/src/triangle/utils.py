import numpy as np

from src.hexcoords import t_to_s
from src.quadrature import delta_nodes

_CHUNK = 8192


class DeltaQuadrature:
    """Node set of the triangle rule with exponential moment helpers.

    Every node carries the same weight, so inner products are plain means.
    """

    def __init__(self, M: int):
        self.M = M
        self.nodes = delta_nodes(M)
        s1, s2 = t_to_s(self.nodes)
        self._s1 = np.ravel(s1)
        self._s2 = np.ravel(s2)

    @property
    def size(self) -> int:
        return len(self._s1)

    def projections(self, values: np.ndarray, n: int) -> np.ndarray:
        """P[j1+n, j2+n] = mean over nodes of values * conj(phi_j), for |j1|, |j2| <= n."""
        values = np.ravel(np.asarray(values, dtype=complex))
        k = np.arange(-n, n + 1)
        out = np.zeros((2 * n + 1, 2 * n + 1), dtype=complex)
        for start in range(0, self.size, _CHUNK):
            stop = start + _CHUNK
            E1 = np.exp(-2j * np.pi * np.outer(self._s1[start:stop], k))
            E2 = np.exp(-2j * np.pi * np.outer(self._s2[start:stop], k))
            out += E1.T @ (values[start:stop, None] * E2)
        return out / self.size

    def moments(self, n: int) -> np.ndarray:
        """Z[d1+n, d2+n] = <phi_d, 1> over the triangle."""
        return np.conj(self.projections(np.ones(self.size), n))
