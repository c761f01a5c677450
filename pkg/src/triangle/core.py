"""
Generalized cosine and sine functions on the equilateral triangle.

TC_k and TS_k are the symmetric and antisymmetric projections of phi_k
under the six-element group A2. For k1 != k2 they are complex, with
TC_(k2,k1) = conj(TC_(k1,k2)); they are real on the diagonal k1 = k2.
"""

import logging
from typing import Callable, Dict, List, Optional

import numpy as np

from src.errors import NumericalError, UsageError
from src.hexcoords import (
    GROUP_ORDER,
    HexPoint,
    apply_reflection,
    contains_delta,
    phi,
    reduce_to_omega,
    reflect_index,
)
from src.operators import CoeffTable, cesaro_means, coefficients, evaluate
from src.quadrature import HexFunction, sample_points
from src.triangle.types import CosineCoeffTable, TriIndex
from src.triangle.utils import DeltaQuadrature

logger = logging.getLogger(__name__)

DELTA_TOL = 1e-12


def triangle_indices(n: int) -> List[TriIndex]:
    """Lambda restricted to -k3 <= n, lexicographic."""
    if n < 0:
        raise UsageError(f"Degree must be non-negative, got {n}")
    return [TriIndex(k1, k2) for k1 in range(n + 1) for k2 in range(n + 1 - k1)]


def project_sym(f: HexFunction, sign: int = 1) -> HexFunction:
    """P+ (sign=+1) or P- (sign=-1): average of f over the group, reflections weighted by sign."""
    if sign not in (1, -1):
        raise UsageError(f"Projection sign must be +1 or -1, got {sign}")

    def projected(t: HexPoint) -> np.ndarray:
        total = 0
        for g in GROUP_ORDER:
            weight = sign if g.is_reflection else 1
            total = total + weight * np.asarray(f(apply_reflection(t, g)), dtype=complex)
        return total / 6

    return projected


def orbit(k: TriIndex) -> List:
    """Indices k g for g in the group, in group order; phi_k(t g) = phi_{k g}(t)."""
    return [reflect_index(k.as_hex(), g) for g in GROUP_ORDER]


def tc(k: TriIndex, t: HexPoint) -> np.ndarray:
    """Generalized cosine TC_k = P+ phi_k."""
    return project_sym(lambda x: phi(k.as_hex(), x), 1)(t)


def ts(k: TriIndex, t: HexPoint) -> np.ndarray:
    """Generalized sine TS_k = P- phi_k / i."""
    return project_sym(lambda x: phi(k.as_hex(), x), -1)(t) / 1j


def _lookup(dense: np.ndarray, n: int, j) -> complex:
    return dense[j.j1 + n, j.j2 + n]


def cosine_gram(n: int, M: int, quadrature: Optional[DeltaQuadrature] = None) -> np.ndarray:
    """Matrix of <TC_k, TC_m> over the triangle for k, m in triangle_indices(n)."""
    quadrature = quadrature or DeltaQuadrature(M)
    indices = triangle_indices(n)
    Z = quadrature.moments(2 * n)
    orbits = [orbit(k) for k in indices]
    gram = np.zeros((len(indices), len(indices)), dtype=complex)
    for a, orbit_k in enumerate(orbits):
        for b, orbit_m in enumerate(orbits):
            gram[a, b] = sum(Z[p.j1 - q.j1 + 2 * n, p.j2 - q.j2 + 2 * n]
                             for p in orbit_k for q in orbit_m) / 36
    return gram


def _tc_norms(indices: List[TriIndex], quadrature: DeltaQuadrature, n: int) -> np.ndarray:
    Z = quadrature.moments(2 * n)
    norms = np.empty(len(indices))
    for a, k in enumerate(indices):
        points = orbit(k)
        value = sum(Z[p.j1 - q.j1 + 2 * n, p.j2 - q.j2 + 2 * n] for p in points for q in points) / 36
        norms[a] = value.real
    return norms


def cosine_coeffs(f: HexFunction, n: int, M: int,
                  quadrature: Optional[DeltaQuadrature] = None) -> CosineCoeffTable:
    """<f, TC_k> / <TC_k, TC_k> over the triangle for every k with -k3 <= n.

    Both inner products use the same triangle rule.
    """
    quadrature = quadrature or DeltaQuadrature(M)
    indices = triangle_indices(n)
    P = quadrature.projections(sample_points(f, quadrature.nodes), n)
    norms = _tc_norms(indices, quadrature, n)
    entries: Dict[TriIndex, complex] = {}
    for k, norm in zip(indices, norms):
        inner = sum(_lookup(P, n, j) for j in orbit(k)) / 6
        entries[k] = inner / norm
    logger.debug(f"Cosine coefficients up to degree {n} from {quadrature.size} nodes (M={M})")
    return CosineCoeffTable(entries, n, M)


def to_hex_table(table: CosineCoeffTable, weights: Optional[Callable[[int], float]] = None) -> CoeffTable:
    """Expand sum_k w(-k3) c_k TC_k into exponentials."""
    accumulated: Dict = {}
    for k, value in table.entries.items():
        w = 1.0 if weights is None else weights(k.degree)
        for j in orbit(k):
            accumulated[j] = accumulated.get(j, 0j) + w * value / 6
    return CoeffTable.from_mapping(accumulated)


def evaluate_cosine(table: CosineCoeffTable, t: HexPoint) -> np.ndarray:
    return evaluate(to_hex_table(table), t)


def cosine_cesaro1(f: HexFunction, n: int, M: int,
                   quadrature: Optional[DeltaQuadrature] = None) -> HexFunction:
    """(C,1) mean of the cosine series of f: weights (n + 1 - degree) / (n + 1)."""
    table = cosine_coeffs(f, n, M, quadrature)
    series = to_hex_table(table, lambda degree: (n + 1 - degree) / (n + 1))
    return lambda t: evaluate(series, t)


def hexagon_cesaro1(f: HexFunction, n: int, N: Optional[int] = None) -> HexFunction:
    """Extend f symmetrically, apply the hexagonal (C,1) means, return the result."""
    extended = extend_symmetric(f)
    if N is None:
        N = max(4 * n + 1, 65)
    series = cesaro_means(coefficients(extended, n, N), n, 1.0)
    return lambda t: evaluate(series, t)


def check_compatibility(f: HexFunction, M: int) -> Dict[str, float]:
    """Residuals of the three boundary identities over M samples of t1 + t2 = 1.

    f(t1, t2, -1) = f(-t2, -t1, 1), f(t2, -1, t1) = f(-t1, 1, -t2) and
    f(-1, t1, t2) = f(1, -t2, -t1), each at t1, t2 >= 0.
    """
    if M < 2:
        raise UsageError(f"Compatibility check needs M >= 2 samples, got {M}")
    t1 = np.linspace(0.0, 1.0, M)
    t2 = 1.0 - t1
    one = np.ones(M)
    pairs = [
        (HexPoint(t1, t2), HexPoint(-t2, -t1)),
        (HexPoint(t2, -one), HexPoint(-t1, one)),
        (HexPoint(-one, t1), HexPoint(one, -t2)),
    ]
    residuals = [float(np.max(np.abs(sample_points(f, a) - sample_points(f, b)))) for a, b in pairs]
    return {
        "samples": M,
        "residual_1": residuals[0],
        "residual_2": residuals[1],
        "residual_3": residuals[2],
        "max_violation": max(residuals),
    }


def reduce_to_delta(t: HexPoint) -> HexPoint:
    """Image of t in the triangle under the lattice and the group; first match in group order."""
    u = reduce_to_omega(t)
    t1 = np.full(u.shape, np.nan)
    t2 = np.full(u.shape, np.nan)
    assigned = np.zeros(u.shape, dtype=bool)
    for g in GROUP_ORDER:
        v = apply_reflection(u, g)
        hit = contains_delta(v, DELTA_TOL) & ~assigned
        t1 = np.where(hit, v.t1, t1)
        t2 = np.where(hit, v.t2, t2)
        assigned |= hit
    if not np.all(assigned):
        raise NumericalError(f"{int(np.sum(~assigned))} point(s) found no image in the triangle")
    return HexPoint(t1, t2)


def extend_symmetric(f: HexFunction) -> HexFunction:
    """A2-invariant, H-periodic extension F(t) = f(t sigma) with t sigma in the triangle."""
    return lambda t: f(reduce_to_delta(t))
