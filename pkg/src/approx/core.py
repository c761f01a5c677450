"""
Modulus of smoothness, best and near-best approximation, and the sweeps
behind the direct, inverse and Bernstein experiments.

Sweep functions accept `mapper`, a map-like callable, so a caller can run
the per-n tasks on an executor. Results keep the order of the sweep.
"""

import logging
import math
from typing import Callable, Iterable, List, Optional, Sequence

import numpy as np
from scipy.special import binom, factorial

from src.approx.types import ExperimentReport, ModulusSpec
from src.errors import UsageError
from src.hexcoords import HexPoint, euclid_norm, hex_norm
from src.kernels import dirichlet, jackson_moment, theta
from src.operators import (
    CoeffTable,
    coefficients,
    coefficients_from_grid,
    derivative,
    smoothed_cutoff,
    synthesize,
)
from src.quadrature import (
    OMEGA_AREA,
    HexFunction,
    grid_points,
    lp_norm,
    lp_norm_values,
    sample,
    sample_points,
)

logger = logging.getLogger(__name__)

SAMPLING_SLACK = 5e-2

Mapper = Callable[..., Iterable]

# Orthonormal basis of the plane t1 + t2 + t3 = 0 in R^3.
_E1 = np.array([1.0, -1.0, 0.0]) / np.sqrt(2.0)
_E2 = np.array([1.0, 1.0, -2.0]) / np.sqrt(6.0)


def format_p(p: float) -> str:
    return "inf" if math.isinf(p) else f"{p:g}"


def finite_difference(f: HexFunction, t: HexPoint, r: int) -> HexFunction:
    """x -> sum_k (-1)^(r-k) C(r, k) f(x + k t), the r-fold iterate of f(x+t) - f(x)."""
    if r < 1:
        raise UsageError(f"Difference order must be >= 1, got {r}")
    weights = [(-1) ** (r - k) * binom(r, k) for k in range(r + 1)]

    def difference(x: HexPoint) -> np.ndarray:
        total = 0
        for k, w in enumerate(weights):
            total = total + w * np.asarray(f(x + t.scale(k)))
        return total

    return difference


def directions(count: int, norm: str = "euclid") -> List[HexPoint]:
    """`count` equispaced unit directions in the plane, unit in the chosen norm."""
    out = []
    for k in range(count):
        angle = 2 * np.pi * k / count
        d = np.cos(angle) * _E1 + np.sin(angle) * _E2
        point = HexPoint(d[0], d[1])
        length = float(hex_norm(point) if norm == "hex" else euclid_norm(point))
        out.append(point.scale(1.0 / length))
    return out


def modulus(f: HexFunction, spec: ModulusSpec) -> float:
    """Sampled omega_r(f; h)_p; a lower bound of the true supremum."""
    nodes = grid_points(spec.grid_size)
    base = sample_points(f, nodes)
    best = 0.0
    for d in directions(spec.direction_count, spec.norm):
        for i in range(1, spec.radius_count + 1):
            shift = d.scale(spec.h * i / spec.radius_count)
            total = (-1) ** spec.r * base
            for k in range(1, spec.r + 1):
                moved = sample_points(f, nodes + shift.scale(k))
                total = total + (-1) ** (spec.r - k) * binom(spec.r, k) * moved
            best = max(best, lp_norm_values(total, spec.p))
    return best


def best_approx_l2(c: CoeffTable, n: int) -> float:
    """E_n(f)_2 = sqrt(|Omega| * sum of |c_j|^2 over |j|_H > n)."""
    if n < 0:
        raise UsageError(f"Degree must be non-negative, got {n}")
    if c.max_degree < n:
        logger.warning(f"Coefficient table of degree {c.max_degree} has no tail beyond n={n}")
    tail = c.values[c.degrees > n]
    return float(np.sqrt(OMEGA_AREA * np.sum(np.abs(tail) ** 2)))


def near_best_grid(n: int) -> int:
    return max(8 * n + 1, 65)


def near_best(f: HexFunction, n: int, p: float, N: Optional[int] = None) -> float:
    """||eta_n f - f||_p, a surrogate for E_n(f)_p within a constant factor."""
    if n < 1:
        raise UsageError(f"Near-best degree must be >= 1, got {n}")
    if N is None:
        N = near_best_grid(n)
    g = sample(f, N)
    c = coefficients_from_grid(g, 2 * n)
    approx = synthesize(smoothed_cutoff(c, n), N)
    return lp_norm_values(approx.values - g.values, p)


def lebesgue_grid(n: int) -> int:
    return max(513, 8 * n + 1)


def lebesgue_constant(n: int, N: Optional[int] = None) -> float:
    """(1/|Omega|) * integral of |D_n| over the hexagon."""
    if n < 0:
        raise UsageError(f"Degree must be non-negative, got {n}")
    if N is None:
        N = lebesgue_grid(n)
    return float(np.mean(np.abs(dirichlet(n, grid_points(N)))))


def theta_l1(n: int, N: int = 1025) -> float:
    """I_n = integral of |Theta_n| over the hexagon."""
    return float(OMEGA_AREA * np.mean(np.abs(theta(n, grid_points(N)))))


def bernstein_ratio(c: CoeffTable, alpha: Sequence[int], p: float = math.inf,
                    N: Optional[int] = None) -> float:
    """||d^alpha S||_p / (n^|alpha| ||S||_p) for S = evaluate(c) and n = max degree."""
    if len(c) == 0 or not np.any(c.values != 0):
        raise UsageError("Bernstein ratio of the zero polynomial is undefined")
    n = c.max_degree
    if N is None:
        N = max(4 * n + 1, 17)
    numerator = lp_norm(synthesize(derivative(c, alpha), N), p)
    if numerator == 0.0:
        return 0.0
    return numerator / (n ** sum(alpha) * lp_norm(synthesize(c, N), p))


def random_table(n: int, rng: np.random.Generator) -> CoeffTable:
    """Complex Gaussian coefficients over H_n."""
    size = 2 * n + 1
    dense = rng.standard_normal((size, size)) + 1j * rng.standard_normal((size, size))
    return CoeffTable.from_dense(dense, n)


def _ratio(lhs: float, rhs: float, floor: float = 1e-14) -> float:
    if rhs <= floor:
        return math.nan
    return lhs / rhs


def _spread(values: Iterable[float]) -> float:
    finite = [v for v in values if np.isfinite(v) and v > 0]
    if not finite:
        return math.nan
    return max(finite) / min(finite)


def _fit_log_squared(ns: Sequence[int], values: Sequence[float]):
    x = np.log(np.asarray(ns, dtype=float)) ** 2
    y = np.asarray(values, dtype=float)
    b, a = np.polyfit(x, y, 1)
    residual = y - (a + b * x)
    total = y - y.mean()
    r2 = 1.0 - float(residual @ residual) / float(total @ total)
    return float(a), float(b), r2


def lebesgue_sweep(ns: Sequence[int], mapper: Mapper = map) -> ExperimentReport:
    """L_n over the sweep with a least-squares fit a + b (log n)^2."""
    report = ExperimentReport("lebesgue", parameters={"ns": list(ns)})
    values = list(mapper(lebesgue_constant, ns))
    for n, value in zip(ns, values):
        report.add_row(lebesgue_grid(n), 0.0, n=n, lebesgue=value)
    if len(ns) >= 3:
        a, b, r2 = _fit_log_squared(ns, values)
        report.fitted.update({"a": a, "b": b, "r_squared": r2})
    return report


def l1_growth(ns: Sequence[int], N: int = 1025, mapper: Mapper = map) -> ExperimentReport:
    """I_n / n for the (C,1) kernel."""
    report = ExperimentReport("l1growth", parameters={"ns": list(ns), "N": N})
    values = list(mapper(lambda n: theta_l1(n, N), ns))
    for n, value in zip(ns, values):
        report.add_row(N, 0.0, n=n, integral=value, ratio=value / n)
    report.constants["spread"] = _spread(report.column("ratio"))
    return report


def moment_sweep(r: int, nu: float, ns: Sequence[int], mapper: Mapper = map) -> ExperimentReport:
    """n^nu times the nu-th moment of the Jackson kernel K_{n,r}."""
    report = ExperimentReport("moments", parameters={"r": r, "nu": nu, "ns": list(ns)})
    values = list(mapper(lambda n: jackson_moment(n, r, nu), ns))
    for n, value in zip(ns, values):
        report.add_row(max(8 * r * n + 1, 65), 0.0, n=n, moment=value, scaled=n ** nu * value)
    report.constants["spread"] = _spread(report.column("scaled"))
    return report


def bernstein_sweep(ns: Sequence[int], alphas: Sequence[Sequence[int]], trials: int = 200,
                    seed: int = 0, p: float = math.inf, mapper: Mapper = map) -> ExperimentReport:
    """Largest Bernstein ratio over seeded random polynomials, per n and alpha."""
    report = ExperimentReport("bernstein", parameters={
        "ns": list(ns), "alphas": [list(a) for a in alphas], "trials": trials, "seed": seed, "p": format_p(p),
    })

    def worst(n):
        rng = np.random.default_rng([seed, n])
        tables = [random_table(n, rng) for _ in range(trials)]
        return [max(bernstein_ratio(c, alpha, p) for c in tables) for alpha in alphas]

    results = list(mapper(worst, ns))
    for n, per_alpha in zip(ns, results):
        for alpha, value in zip(alphas, per_alpha):
            report.add_row(max(4 * n + 1, 17), 0.0, n=n, alpha=",".join(str(a) for a in alpha),
                           max_ratio=value)
    for i, alpha in enumerate(alphas):
        label = ",".join(str(a) for a in alpha)
        first, last = results[0][i], results[-1][i]
        report.constants[f"bound[{label}]"] = max(res[i] for res in results)
        report.constants[f"growth[{label}]"] = last / first if first > 0 else math.nan
    return report


def direct_check(f: HexFunction, r: int, ns: Sequence[int], p: float = math.inf,
                 spec: Optional[ModulusSpec] = None, mapper: Mapper = map) -> ExperimentReport:
    """near_best(f, n, p) against omega_r(f; 1/n)_p over the sweep."""
    spec = spec or ModulusSpec(r, 1.0, p)
    report = ExperimentReport("jackson", parameters={
        "function": getattr(f, "name", repr(f)), "r": r, "p": format_p(p), "ns": list(ns),
    })

    def measure(n):
        return near_best(f, n, p), modulus(f, spec.with_h(1.0 / n))

    for n, (error, omega) in zip(ns, mapper(measure, ns)):
        report.add_row(near_best_grid(n), SAMPLING_SLACK, n=n, near_best=error, modulus=omega,
                       ratio=_ratio(error, omega))
    ratios = [v for v in report.column("ratio") if np.isfinite(v)]
    report.constants["C"] = max(ratios) if ratios else math.nan
    report.constants["stability"] = _spread(ratios)
    return report


def corollary_rate_check(f: HexFunction, r: int, ns: Sequence[int], p: float = math.inf,
                         mapper: Mapper = map) -> ExperimentReport:
    """n^r near_best(f, n, p), bounded for f with r continuous derivatives."""
    report = ExperimentReport("rate", parameters={
        "function": getattr(f, "name", repr(f)), "r": r, "p": format_p(p), "ns": list(ns),
    })
    for n, error in zip(ns, mapper(lambda n: near_best(f, n, p), ns)):
        report.add_row(near_best_grid(n), 0.0, n=n, near_best=error, scaled=n ** r * error)
    report.constants["max_scaled"] = max(report.column("scaled"))
    return report


def cutoff_norm(functions: Sequence[HexFunction], ns: Sequence[int],
                mapper: Mapper = map) -> ExperimentReport:
    """Measured ||eta_n f||_inf / ||f||_inf across functions and degrees."""
    report = ExperimentReport("cutoff", parameters={
        "functions": [getattr(f, "name", repr(f)) for f in functions], "ns": list(ns),
    })

    def measure(n):
        N = near_best_grid(n)
        out = []
        for f in functions:
            g = sample(f, N)
            smoothed = synthesize(smoothed_cutoff(coefficients_from_grid(g, 2 * n), n), N)
            out.append(lp_norm(smoothed, math.inf) / lp_norm(g, math.inf))
        return out

    for n, ratios in zip(ns, mapper(measure, ns)):
        for f, ratio in zip(functions, ratios):
            report.add_row(near_best_grid(n), 0.0, n=n, function=getattr(f, "name", repr(f)), ratio=ratio)
    report.constants["C"] = max(report.column("ratio"))
    return report


def _l2_estimates(f: HexFunction, top: int) -> List[float]:
    degree = 2 * max(top, 1)
    c = coefficients(f, degree, 2 * degree + 1)
    return [best_approx_l2(c, n) for n in range(top + 1)]


def _near_best_estimates(f: HexFunction, top: int, p: float) -> List[float]:
    N = near_best_grid(max(top, 1))
    g = sample(f, N)
    mean = np.mean(g.values)
    estimates = [lp_norm_values(g.values - mean, p)]
    estimates += [near_best(f, n, p) for n in range(1, top + 1)]
    return estimates


def inverse_check(f: HexFunction, r: int, p: float = 2.0,
                  hs: Sequence[float] = (1 / 8, 1 / 16, 1 / 32),
                  spec: Optional[ModulusSpec] = None) -> ExperimentReport:
    """omega_r(f; h)_p against h^r sum_{n <= 1/h} (n+1)^(r-1) E_n(f)_p.

    E_n is exact for p = 2 and estimated by near_best otherwise; E_0 is
    estimated by the distance to the mean.
    """
    if r < 1:
        raise UsageError(f"Difference order must be >= 1, got {r}")
    spec = spec or ModulusSpec(r, hs[0], p)
    top = int(math.floor(1.0 / min(hs) + 1e-9))
    if p == 2:
        estimates = _l2_estimates(f, top)
    else:
        estimates = _near_best_estimates(f, top, p)

    report = ExperimentReport("inverse", parameters={
        "function": getattr(f, "name", repr(f)), "r": r, "p": format_p(p), "hs": list(hs),
    })
    for h in hs:
        lhs = modulus(f, spec.with_h(h))
        m = int(math.floor(1.0 / h + 1e-9))
        rhs = h ** r * sum((n + 1) ** (r - 1) * estimates[n] for n in range(m + 1))
        ratio = _ratio(lhs, rhs)
        if not np.isfinite(ratio):
            report.notes.append(f"h={h:g}: vacuous comparison (right-hand side vanishes)")
        report.add_row(spec.grid_size, SAMPLING_SLACK, h=h, lhs=lhs, rhs=rhs, ratio=ratio)
    ratios = [v for v in report.column("ratio") if np.isfinite(v)]
    report.constants["C"] = max(ratios) if ratios else math.nan
    report.constants["stability"] = _spread(ratios)
    return report


def derivative_bound(f_table: CoeffTable, r: int, h: float, N: Optional[int] = None) -> float:
    """h^r sum_{|k| = r} r!/k! ||d^k f||_inf for a polynomial given by its coefficients."""
    if N is None:
        N = max(64, 8 * f_table.max_degree + 1)
    total = 0.0
    for k1 in range(r + 1):
        for k2 in range(r + 1 - k1):
            k = (k1, k2, r - k1 - k2)
            weight = factorial(r) / (factorial(k[0]) * factorial(k[1]) * factorial(k[2]))
            total += weight * lp_norm(synthesize(derivative(f_table, k), N), math.inf)
    return float(h ** r * total)
