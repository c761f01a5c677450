from typing import Any, Dict, Optional

import numpy as np
import pandas as pd

from src.errors import UsageError


class GridFunction:
    """Samples of an H-periodic function on the N x N cell grid.

    Entry (a, b) holds f at the point whose cell coordinates are (a/N, b/N).
    """

    def __init__(self, N: int, values: np.ndarray):
        if N < 1:
            raise UsageError(f"Grid size must be at least 1, got {N}")
        values = np.asarray(values, dtype=complex)
        if values.shape != (N, N):
            raise UsageError(f"Expected {N}x{N} samples, got shape {values.shape}")
        values = values.copy()
        values.setflags(write=False)
        self.N = N
        self.values = values

    def to_frame(self) -> pd.DataFrame:
        """Long-form table with columns a, b, re, im."""
        a, b = np.meshgrid(np.arange(self.N), np.arange(self.N), indexing="ij")
        return pd.DataFrame({
            "a": a.ravel(),
            "b": b.ravel(),
            "re": self.values.real.ravel(),
            "im": self.values.imag.ravel(),
        })

    @classmethod
    def from_frame(cls, frame: pd.DataFrame, N: Optional[int] = None) -> "GridFunction":
        if N is None:
            N = int(frame["a"].max()) + 1
        if len(frame) != N * N:
            raise UsageError(f"Expected {N * N} rows for N={N}, got {len(frame)}")
        values = np.zeros((N, N), dtype=complex)
        values[frame["a"].to_numpy(), frame["b"].to_numpy()] = (
            frame["re"].to_numpy() + 1j * frame["im"].to_numpy()
        )
        return cls(N, values)

    def to_dict(self) -> Dict[str, Any]:
        return {"N": self.N, "rows": self.to_frame().to_dict(orient="records")}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "GridFunction":
        if "N" not in data or "rows" not in data:
            raise UsageError("Grid function data needs N and rows")
        frame = pd.DataFrame(data["rows"], columns=["a", "b", "re", "im"])
        return cls.from_frame(frame, int(data["N"]))

    def __repr__(self):
        return f"GridFunction(N={self.N})"
