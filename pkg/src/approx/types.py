import math
from typing import Any, Dict, List, Optional

import pandas as pd

from src.errors import UsageError

NORMS = ("euclid", "hex")


class ModulusSpec:
    """Parameters of a sampled modulus of smoothness omega_r(f; h)_p.

    The sup over shifts ||t|| <= h is replaced by `direction_count`
    equispaced directions times `radius_count` radii in (0, h]. `norm`
    selects ||t|| = (t1^2 + t2^2)^(1/2) ("euclid") or |t|_H ("hex").
    """

    def __init__(self, r: int, h: float, p: float = math.inf, direction_count: int = 8,
                 radius_count: int = 4, grid_size: int = 64, norm: str = "euclid"):
        self.r = int(r)
        self.h = float(h)
        self.p = float(p)
        self.direction_count = int(direction_count)
        self.radius_count = int(radius_count)
        self.grid_size = int(grid_size)
        self.norm = norm
        self._validate()

    def _validate(self):
        problems = []
        if self.r < 1:
            problems.append(f"r must be >= 1, got {self.r}")
        if not self.h > 0:
            problems.append(f"h must be > 0, got {self.h}")
        if not self.p >= 1:
            problems.append(f"p must be >= 1, got {self.p}")
        if self.direction_count < 8:
            problems.append(f"direction_count must be >= 8, got {self.direction_count}")
        if self.radius_count < 4:
            problems.append(f"radius_count must be >= 4, got {self.radius_count}")
        if self.grid_size < 1:
            problems.append(f"grid_size must be >= 1, got {self.grid_size}")
        if self.norm not in NORMS:
            problems.append(f"norm must be one of {NORMS}, got {self.norm!r}")
        if problems:
            raise UsageError("Invalid modulus spec: " + "; ".join(problems))

    def with_h(self, h: float) -> "ModulusSpec":
        return ModulusSpec(self.r, h, self.p, self.direction_count, self.radius_count,
                           self.grid_size, self.norm)

    def __repr__(self):
        return (f"ModulusSpec(r={self.r}, h={self.h}, p={self.p}, directions={self.direction_count}, "
                f"radii={self.radius_count}, N={self.grid_size}, norm={self.norm})")


class ExperimentReport:
    """Rows of one experiment sweep plus fitted rates and constants.

    Every row carries the grid size and tolerance it was computed with.
    """

    def __init__(self, method: str, rows: Optional[List[Dict[str, Any]]] = None,
                 parameters: Optional[Dict[str, Any]] = None):
        self.method = method
        self.rows: List[Dict[str, Any]] = list(rows or [])
        self.parameters: Dict[str, Any] = dict(parameters or {})
        self.fitted: Dict[str, float] = {}
        self.constants: Dict[str, float] = {}
        self.notes: List[str] = []

    def add_row(self, grid_N: int, tolerance: float, **values):
        row = {"method": self.method}
        row.update(values)
        row["grid_N"] = int(grid_N)
        row["tolerance"] = float(tolerance)
        self.rows.append(row)

    def column(self, name: str) -> List[Any]:
        return [row[name] for row in self.rows]

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.rows)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "method": self.method,
            "parameters": self.parameters,
            "rows": self.rows,
            "fitted": self.fitted,
            "constants": self.constants,
            "notes": self.notes,
        }

    def __repr__(self):
        return f"ExperimentReport(method={self.method}, rows={len(self.rows)}, constants={self.constants})"
