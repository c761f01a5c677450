from dataclasses import dataclass
from typing import Any, Dict, List, Mapping

import pandas as pd

from src.errors import UsageError
from src.hexcoords import HexIndex


@dataclass(frozen=True, order=True)
class TriIndex:
    """An index k of the cone Lambda: k1 >= 0, k2 >= 0, k3 = -(k1 + k2) <= 0."""

    k1: int
    k2: int

    def __post_init__(self):
        if self.k1 < 0 or self.k2 < 0:
            raise UsageError(f"({self.k1},{self.k2},{self.k3}) is not in the triangle index cone")

    @classmethod
    def of(cls, k1: int, k2: int, k3: int) -> "TriIndex":
        if k1 + k2 + k3 != 0:
            raise UsageError(f"Index ({k1},{k2},{k3}) does not satisfy k1+k2+k3=0")
        return cls(int(k1), int(k2))

    @property
    def k3(self) -> int:
        return -self.k1 - self.k2

    @property
    def degree(self) -> int:
        """-k3, the degree used by the cosine filtration."""
        return self.k1 + self.k2

    def as_hex(self) -> HexIndex:
        return HexIndex(self.k1, self.k2)

    def as_triple(self):
        return self.k1, self.k2, self.k3

    def __repr__(self):
        return f"TriIndex({self.k1}, {self.k2}, {self.k3})"


class CosineCoeffTable:
    """Coefficients of a generalized cosine series on the triangle."""

    def __init__(self, entries: Mapping[TriIndex, complex], n: int, M: int):
        self.entries: Dict[TriIndex, complex] = {k: complex(entries[k]) for k in sorted(entries)}
        self.n = n
        self.M = M

    def entry(self, k: TriIndex) -> complex:
        return self.entries.get(k, 0j)

    def indices(self) -> List[TriIndex]:
        return list(self.entries)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "tri_entries": [
                {"k": list(k.as_triple()), "re": v.real, "im": v.imag}
                for k, v in self.entries.items()
            ],
            "n": self.n,
            "M": self.M,
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "CosineCoeffTable":
        entries = {TriIndex.of(*row["k"]): row["re"] + 1j * row["im"] for row in data["tri_entries"]}
        return cls(entries, data["n"], data["M"])

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([
            {"k1": k.k1, "k2": k.k2, "k3": k.k3, "re": v.real, "im": v.imag}
            for k, v in self.entries.items()
        ])

    def __len__(self):
        return len(self.entries)

    def __repr__(self):
        return f"CosineCoeffTable(entries={len(self)}, n={self.n}, M={self.M})"
