from enum import Enum
from typing import Optional

from src.errors import UsageError


class KernelKind(Enum):
    DIRICHLET = "dirichlet"
    THETA = "theta"
    POISSON = "poisson"
    CESARO = "cesaro"
    CESARO2 = "cesaro2"
    JACKSON = "jackson"
    ETA = "eta"


class KernelSpec:
    """Tagged choice of a summability kernel together with its parameters."""

    def __init__(self, kind: KernelKind, n: int = 0, r: Optional[float] = None,
                 delta: Optional[float] = None):
        self.kind = KernelKind(kind)
        self.n = int(n)
        self.r = r
        self.delta = delta
        self._validate()

    def _validate(self):
        if self.kind is not KernelKind.POISSON and self.n < 0:
            raise UsageError(f"{self.kind.value} kernel needs n >= 0, got {self.n}")
        if self.kind is KernelKind.POISSON:
            if self.r is None or not 0 <= self.r < 1:
                raise UsageError(f"Poisson kernel needs 0 <= r < 1, got {self.r}")
        elif self.kind is KernelKind.CESARO:
            if self.delta is None or not self.delta > -1:
                raise UsageError(f"Cesaro kernel needs delta > -1, got {self.delta}")
        elif self.kind is KernelKind.JACKSON:
            if self.r is None or int(self.r) != self.r or self.r < 1:
                raise UsageError(f"Jackson kernel needs an integer r >= 1, got {self.r}")
            self.r = int(self.r)
        elif self.kind is KernelKind.ETA and self.n < 1:
            raise UsageError(f"Smoothed cutoff kernel needs n >= 1, got {self.n}")

    @property
    def degree(self) -> Optional[int]:
        """Hexagonal degree of the kernel; None for the Poisson kernel."""
        if self.kind is KernelKind.POISSON:
            return None
        if self.kind is KernelKind.JACKSON:
            return 2 * self.r * self.n
        if self.kind is KernelKind.ETA:
            return 2 * self.n
        return self.n

    @property
    def label(self) -> str:
        if self.kind is KernelKind.POISSON:
            return f"poisson(r={self.r})"
        if self.kind is KernelKind.CESARO:
            return f"cesaro(n={self.n}, delta={self.delta})"
        if self.kind is KernelKind.JACKSON:
            return f"jackson(n={self.n}, r={self.r})"
        return f"{self.kind.value}(n={self.n})"

    def __repr__(self):
        return f"KernelSpec({self.label})"
