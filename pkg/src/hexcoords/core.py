"""
Homogeneous coordinates, the hexagon and triangle domains, frequency index
sets and the A2 reflection action.
"""

import logging
from typing import List, Tuple, Union

import numpy as np

from src.errors import UsageError
from src.hexcoords.types import ArrayLike, GROUP_ORDER, HexIndex, HexPoint, ReflectionElement

logger = logging.getLogger(__name__)

SQRT3 = np.sqrt(3.0)

IndexLike = Union[HexIndex, Tuple[int, int, int]]


def to_homogeneous(x1: ArrayLike, x2: ArrayLike) -> HexPoint:
    """Map Cartesian (x1, x2) to homogeneous coordinates."""
    x1 = np.asarray(x1, dtype=float)
    x2 = np.asarray(x2, dtype=float)
    return HexPoint(-x2 / 2 + SQRT3 * x1 / 2, x2)


def from_homogeneous(t: HexPoint) -> Tuple[np.ndarray, np.ndarray]:
    """Map homogeneous coordinates back to Cartesian (x1, x2)."""
    t1, t2, t3 = t.as_triple()
    x1 = SQRT3 * (t1 - t3) / 3
    x2 = (-(t1 - t3) + 2 * (t2 - t3)) / 3
    return x1, x2


def t_to_s(t: HexPoint) -> Tuple[np.ndarray, np.ndarray]:
    """Cell coordinates in which the hexagonal lattice becomes the integer lattice."""
    return (2 * t.t1 + t.t2) / 3, (t.t1 + 2 * t.t2) / 3


def s_to_t(s1: ArrayLike, s2: ArrayLike) -> HexPoint:
    """Inverse of t_to_s."""
    s1 = np.asarray(s1, dtype=float)
    s2 = np.asarray(s2, dtype=float)
    return HexPoint(2 * s1 - s2, 2 * s2 - s1)


def _fractional(s: np.ndarray) -> np.ndarray:
    frac = s - np.floor(s)
    # s slightly below an integer rounds up to exactly 1.0
    return np.where(frac >= 1.0, frac - 1.0, frac)


def reduce_mod3(t: HexPoint) -> HexPoint:
    """Representative of t modulo the hexagonal lattice with (s1, s2) in [0, 1)^2."""
    s1, s2 = t_to_s(t)
    return s_to_t(_fractional(s1), _fractional(s2))


def hex_norm(t: HexPoint) -> np.ndarray:
    """|t|_H = max(|t1|, |t2|, |t3|)."""
    t1, t2, t3 = t.as_triple()
    return np.maximum(np.maximum(np.abs(t1), np.abs(t2)), np.abs(t3))


def euclid_norm(t: HexPoint) -> np.ndarray:
    """||t|| = (t1^2 + t2^2)^(1/2)."""
    return np.sqrt(t.t1 ** 2 + t.t2 ** 2)


def reduce_to_omega(t: HexPoint) -> HexPoint:
    """Lattice representative of t inside the closed hexagon.

    Chooses, among the translates of the cell representative, the one with
    the smallest hexagonal norm; ties go to the first candidate.
    """
    s1, s2 = t_to_s(t)
    s1 = _fractional(s1)
    s2 = _fractional(s2)
    shifts = [(m1, m2) for m1 in (0, -1, 1) for m2 in (0, -1, 1)]
    norms = np.stack([hex_norm(s_to_t(s1 + m1, s2 + m2)) for m1, m2 in shifts])
    best = np.argmin(norms, axis=0)
    m = np.array(shifts, dtype=float)
    return s_to_t(s1 + m[best, 0], s2 + m[best, 1])


def contains_omega(t: HexPoint, tol: float = 0.0) -> np.ndarray:
    """Membership in the half-open hexagon -1 <= t1, t2, -t3 < 1."""
    t1, t2, t3 = t.as_triple()
    lower = (t1 >= -1 - tol) & (t2 >= -1 - tol) & (-t3 >= -1 - tol)
    upper = (t1 < 1 - tol) & (t2 < 1 - tol) & (-t3 < 1 - tol)
    return lower & upper


def contains_delta(t: HexPoint, tol: float = 0.0) -> np.ndarray:
    """Membership in the closed triangle 0 <= t1, t2, -t3 <= 1."""
    t1, t2, t3 = t.as_triple()
    return (t1 >= -tol) & (t2 >= -tol) & (-t3 >= -tol) & (-t3 <= 1 + tol)


def as_index(j: IndexLike) -> HexIndex:
    if isinstance(j, HexIndex):
        return j
    return HexIndex.of(*j)


def hex_degree(j: IndexLike) -> int:
    return as_index(j).degree


def index_ball(n: int) -> List[HexIndex]:
    """All j with |j|_H <= n in lexicographic (j1, j2) order."""
    if n < 0:
        raise UsageError(f"Index set degree must be non-negative, got {n}")
    return [HexIndex(j1, j2)
            for j1 in range(-n, n + 1)
            for j2 in range(-n, n + 1)
            if abs(j1 + j2) <= n]


def index_shell(n: int) -> List[HexIndex]:
    """All j with |j|_H == n in lexicographic order."""
    return [j for j in index_ball(n) if j.degree == n]


def index_arrays(n: int) -> Tuple[np.ndarray, np.ndarray]:
    """index_ball(n) as two integer arrays (j1, j2)."""
    if n < 0:
        raise UsageError(f"Index set degree must be non-negative, got {n}")
    j1, j2 = np.meshgrid(np.arange(-n, n + 1), np.arange(-n, n + 1), indexing="ij")
    keep = np.abs(j1 + j2) <= n
    return j1[keep], j2[keep]


def degree_of(j1: np.ndarray, j2: np.ndarray) -> np.ndarray:
    """Vectorized hexagonal degree of index arrays."""
    return np.maximum(np.maximum(np.abs(j1), np.abs(j2)), np.abs(j1 + j2))


def phi(j: IndexLike, t: HexPoint) -> np.ndarray:
    """Basis exponential e^{2 pi i j.t / 3}, evaluated through cell coordinates."""
    j = as_index(j)
    s1, s2 = t_to_s(t)
    return np.exp(2j * np.pi * (j.j1 * s1 + j.j2 * s2))


def apply_reflection(t: HexPoint, g: ReflectionElement) -> HexPoint:
    """Right action t -> t g."""
    coords = t.as_triple()
    p = g.perm
    return HexPoint(g.sign * coords[p[0]], g.sign * coords[p[1]])


def compose(g: ReflectionElement, h: ReflectionElement) -> ReflectionElement:
    """Group product gh, meaning t(gh) = (tg)h."""
    sign = g.sign * h.sign
    perm = tuple(g.perm[h.perm[i]] for i in range(3))
    return ReflectionElement((sign, perm))


def inverse(g: ReflectionElement) -> ReflectionElement:
    for h in GROUP_ORDER:
        if compose(g, h) is ReflectionElement.IDENTITY:
            return h
    raise AssertionError(f"{g} has no inverse")


def reflect_index(j: IndexLike, g: ReflectionElement) -> HexIndex:
    """Index j' with phi_j(t g) = phi_j'(t)."""
    j = as_index(j).as_triple()
    p = g.perm
    out = [0, 0, 0]
    for i in range(3):
        out[p[i]] = g.sign * j[i]
    return HexIndex.of(*out)
