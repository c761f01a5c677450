from typing import Any, Dict, Mapping, Optional

import numpy as np
import pandas as pd

from src.errors import UsageError
from src.hexcoords import HexIndex, as_index, degree_of


class CoeffTable:
    """A finite Fourier series: HexIndex -> complex coefficient.

    Indices are kept sorted lexicographically on (j1, j2); this order is the
    serialization order. `grid_N` records the sampling grid the coefficients
    were extracted from, if any.
    """

    def __init__(self, j1: np.ndarray, j2: np.ndarray, values: np.ndarray,
                 grid_N: Optional[int] = None):
        j1 = np.asarray(j1, dtype=np.int64).ravel()
        j2 = np.asarray(j2, dtype=np.int64).ravel()
        values = np.asarray(values, dtype=complex).ravel()
        if not (len(j1) == len(j2) == len(values)):
            raise UsageError("Index and value arrays must have equal length")
        order = np.lexsort((j2, j1))
        j1, j2, values = j1[order], j2[order], values[order]
        if len(j1) > 1 and np.any((np.diff(j1) == 0) & (np.diff(j2) == 0)):
            raise UsageError("Duplicate indices in coefficient table")
        for array in (j1, j2, values):
            array.setflags(write=False)
        self.j1 = j1
        self.j2 = j2
        self.values = values
        self.grid_N = grid_N

    @classmethod
    def from_mapping(cls, entries: Mapping[Any, complex], grid_N: Optional[int] = None) -> "CoeffTable":
        indices = [as_index(j) for j in entries.keys()]
        return cls([j.j1 for j in indices], [j.j2 for j in indices],
                   list(entries.values()), grid_N)

    @classmethod
    def from_dense(cls, dense: np.ndarray, n: int, grid_N: Optional[int] = None) -> "CoeffTable":
        """Keep the H_n part of a (2n+1) x (2n+1) array indexed [j1+n, j2+n]."""
        k = np.arange(-n, n + 1)
        j1, j2 = np.meshgrid(k, k, indexing="ij")
        keep = np.abs(j1 + j2) <= n
        return cls(j1[keep], j2[keep], dense[keep], grid_N)

    @classmethod
    def empty(cls) -> "CoeffTable":
        return cls([], [], [])

    @property
    def j3(self) -> np.ndarray:
        return -self.j1 - self.j2

    @property
    def degrees(self) -> np.ndarray:
        return degree_of(self.j1, self.j2)

    @property
    def max_degree(self) -> int:
        return int(self.degrees.max()) if len(self) else 0

    @property
    def entries(self) -> Dict[HexIndex, complex]:
        return {HexIndex(int(a), int(b)): complex(v)
                for a, b, v in zip(self.j1, self.j2, self.values)}

    def entry(self, j) -> complex:
        j = as_index(j)
        hit = np.flatnonzero((self.j1 == j.j1) & (self.j2 == j.j2))
        return complex(self.values[hit[0]]) if len(hit) else 0j

    def with_values(self, values: np.ndarray) -> "CoeffTable":
        return CoeffTable(self.j1, self.j2, values, self.grid_N)

    def select(self, mask: np.ndarray) -> "CoeffTable":
        return CoeffTable(self.j1[mask], self.j2[mask], self.values[mask], self.grid_N)

    def to_dense(self, n: Optional[int] = None) -> np.ndarray:
        """(2n+1) x (2n+1) array indexed [j1+n, j2+n]; entries beyond n are dropped."""
        if n is None:
            n = self.max_degree
        dense = np.zeros((2 * n + 1, 2 * n + 1), dtype=complex)
        keep = self.degrees <= n
        dense[self.j1[keep] + n, self.j2[keep] + n] = self.values[keep]
        return dense

    def is_real(self, tol: float = 1e-12) -> bool:
        """True when entry(-j) = conj(entry(j)) for every stored j."""
        dense = self.to_dense()
        return bool(np.max(np.abs(dense - np.conj(dense[::-1, ::-1])), initial=0.0) <= tol)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "entries": [
                {"j": [int(a), int(b), int(-a - b)], "re": float(v.real), "im": float(v.imag)}
                for a, b, v in zip(self.j1, self.j2, self.values)
            ],
            "grid_N": self.grid_N,
            "max_degree": self.max_degree,
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "CoeffTable":
        rows = data.get("entries", [])
        for row in rows:
            if sum(row["j"]) != 0:
                raise UsageError(f"Index {row['j']} does not satisfy j1+j2+j3=0")
        return cls([row["j"][0] for row in rows], [row["j"][1] for row in rows],
                   [row["re"] + 1j * row["im"] for row in rows], data.get("grid_N"))

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({
            "j1": self.j1,
            "j2": self.j2,
            "j3": self.j3,
            "re": self.values.real,
            "im": self.values.imag,
        })

    def __len__(self):
        return len(self.values)

    def __repr__(self):
        return f"CoeffTable(entries={len(self)}, max_degree={self.max_degree}, grid_N={self.grid_N})"


class SummabilityMethod:
    """Tagged choice of summability operator, parsed from a method string.

    Syntax: `dirichlet`, `cesaro:delta`, `abel:r`, `abel` (r = 1 - 1/n),
    `jackson:r[,rho]`, `eta`.
    """

    KINDS = ("dirichlet", "cesaro", "abel", "jackson", "eta")

    def __init__(self, kind: str, delta: Optional[float] = None, r: Optional[float] = None,
                 rho: Optional[int] = None):
        if kind not in self.KINDS:
            raise UsageError(f"Unknown summability method '{kind}'. Known: {', '.join(self.KINDS)}")
        self.kind = kind
        self.delta = delta
        self.r = r
        self.rho = rho
        if kind == "cesaro" and (delta is None or delta < 0):
            raise UsageError(f"cesaro needs delta >= 0, got {delta}")
        if kind == "abel" and r is not None and not 0 <= r < 1:
            raise UsageError(f"abel needs 0 <= r < 1, got {r}")
        if kind == "jackson" and (r is None or int(r) != r or r < 1):
            raise UsageError(f"jackson needs an integer r >= 1, got {r}")

    @classmethod
    def parse(cls, text: str) -> "SummabilityMethod":
        kind, _, arg = text.strip().partition(":")
        try:
            if kind in ("dirichlet", "eta"):
                if arg:
                    raise UsageError(f"{kind} takes no parameter, got '{arg}'")
                return cls(kind)
            if kind == "cesaro":
                return cls(kind, delta=float(arg))
            if kind == "abel":
                return cls(kind, r=float(arg)) if arg else cls(kind)
            if kind == "jackson":
                parts = [int(p) for p in arg.split(",")]
                if len(parts) not in (1, 2):
                    raise UsageError(f"jackson takes r or r,rho, got '{arg}'")
                return cls(kind, r=parts[0], rho=parts[1] if len(parts) == 2 else None)
        except ValueError as e:
            if isinstance(e, UsageError):
                raise
            raise UsageError(f"Malformed method '{text}': {e}") from e
        return cls(kind)

    @property
    def label(self) -> str:
        if self.kind == "cesaro":
            return f"cesaro:{self.delta!r}"
        if self.kind == "abel":
            return "abel" if self.r is None else f"abel:{self.r!r}"
        if self.kind == "jackson":
            return f"jackson:{int(self.r)}" + ("" if self.rho is None else f",{self.rho}")
        return self.kind

    def __repr__(self):
        return f"SummabilityMethod({self.label})"
