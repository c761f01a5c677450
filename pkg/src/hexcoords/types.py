from dataclasses import dataclass
from enum import Enum
from typing import Tuple, Union

import numpy as np

from src.errors import UsageError

ArrayLike = Union[float, np.ndarray]

PLANE_TOL = 1e-12


class HexPoint:
    """A point (or an array of points) on the plane t1 + t2 + t3 = 0.

    Only t1 and t2 are stored; t3 is materialized on read so the plane
    constraint cannot drift. Fields may be scalars or equally shaped arrays.
    """

    __slots__ = ("_t1", "_t2")

    def __init__(self, t1: ArrayLike, t2: ArrayLike):
        t1 = np.asarray(t1, dtype=float)
        t2 = np.asarray(t2, dtype=float)
        if t1.shape != t2.shape:
            t1, t2 = np.broadcast_arrays(t1, t2)
        self._t1 = t1
        self._t2 = t2

    @classmethod
    def from_triple(cls, t1: ArrayLike, t2: ArrayLike, t3: ArrayLike,
                    tol: float = PLANE_TOL) -> "HexPoint":
        """Build from three coordinates, rejecting points off the plane."""
        residue = np.abs(np.asarray(t1) + np.asarray(t2) + np.asarray(t3))
        if np.any(residue > tol):
            raise UsageError(f"Point is off the plane t1+t2+t3=0 (residue {np.max(residue):.3e})")
        return cls(t1, t2)

    @property
    def t1(self) -> np.ndarray:
        return self._t1

    @property
    def t2(self) -> np.ndarray:
        return self._t2

    @property
    def t3(self) -> np.ndarray:
        return -self._t1 - self._t2

    @property
    def shape(self) -> Tuple[int, ...]:
        return self._t1.shape

    def as_triple(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        return self.t1, self.t2, self.t3

    def __add__(self, other: "HexPoint") -> "HexPoint":
        return HexPoint(self._t1 + other.t1, self._t2 + other.t2)

    def __sub__(self, other: "HexPoint") -> "HexPoint":
        return HexPoint(self._t1 - other.t1, self._t2 - other.t2)

    def __neg__(self) -> "HexPoint":
        return HexPoint(-self._t1, -self._t2)

    def scale(self, factor: ArrayLike) -> "HexPoint":
        return HexPoint(self._t1 * factor, self._t2 * factor)

    def __repr__(self):
        if self._t1.ndim == 0:
            return f"HexPoint(t1={float(self._t1):.6g}, t2={float(self._t2):.6g}, t3={float(self.t3):.6g})"
        return f"HexPoint(shape={self.shape})"


@dataclass(frozen=True, order=True)
class HexIndex:
    """An integer frequency j with j1 + j2 + j3 = 0, ordered lexicographically on (j1, j2)."""

    j1: int
    j2: int

    @classmethod
    def of(cls, j1: int, j2: int, j3: int) -> "HexIndex":
        if j1 + j2 + j3 != 0:
            raise UsageError(f"Index ({j1},{j2},{j3}) does not satisfy j1+j2+j3=0")
        return cls(int(j1), int(j2))

    @property
    def j3(self) -> int:
        return -self.j1 - self.j2

    @property
    def degree(self) -> int:
        """Hexagonal degree |j|_H = max(|j1|, |j2|, |j3|)."""
        return max(abs(self.j1), abs(self.j2), abs(self.j3))

    def as_triple(self) -> Tuple[int, int, int]:
        return self.j1, self.j2, self.j3

    def __neg__(self) -> "HexIndex":
        return HexIndex(-self.j1, -self.j2)

    def __repr__(self):
        return f"HexIndex({self.j1}, {self.j2}, {self.j3})"


class ReflectionElement(Enum):
    """Elements of the reflection group A2 acting on the right of a point.

    Each value is (sign, perm) with (t g)_i = sign * t_{perm[i]}.
    """

    IDENTITY = (1, (0, 1, 2))
    SIGMA1 = (-1, (0, 2, 1))
    SIGMA2 = (-1, (1, 0, 2))
    SIGMA3 = (-1, (2, 1, 0))
    SIGMA1_SIGMA2 = (1, (2, 0, 1))
    SIGMA2_SIGMA1 = (1, (1, 2, 0))

    @property
    def sign(self) -> int:
        return self.value[0]

    @property
    def perm(self) -> Tuple[int, int, int]:
        return self.value[1]

    @property
    def is_reflection(self) -> bool:
        """True for the three mirror reflections, whose determinant is -1."""
        return self.sign < 0


# Fixed enumeration order used for first-match tie-breaking.
GROUP_ORDER = (
    ReflectionElement.IDENTITY,
    ReflectionElement.SIGMA1,
    ReflectionElement.SIGMA2,
    ReflectionElement.SIGMA3,
    ReflectionElement.SIGMA1_SIGMA2,
    ReflectionElement.SIGMA2_SIGMA1,
)
