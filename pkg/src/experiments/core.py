import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Optional, Sequence

import pandas as pd

from src.approx import (
    ExperimentReport,
    bernstein_sweep,
    cutoff_norm,
    direct_check,
    inverse_check,
    l1_growth,
    lebesgue_sweep,
    moment_sweep,
)
from src.config import default_workers
from src.experiments.utils import measure_resources
from src.operators import SummabilityMethod, apply_method, synthesize
from src.quadrature import HexFunction, lp_norm_values, sample

logger = logging.getLogger(__name__)


def error_grid(n: int) -> int:
    return max(8 * n + 1, 65)


def summability_error(f: HexFunction, method: SummabilityMethod, n: int, p: float = math.inf,
                      N: Optional[int] = None) -> float:
    """||T_n f - f||_p on a grid finer than the approximant's degree."""
    approximant = apply_method(method, f, n, N)
    M = error_grid(max(n, approximant.max_degree))
    residual = synthesize(approximant, M).values - sample(f, M).values
    return lp_norm_values(residual, p)


class ExperimentSuite:
    """Runs n-sweeps on a thread pool and logs their resource use.

    Timing is logged only; it never enters a result, so results are
    reproducible.
    """

    def __init__(self, workers: Optional[int] = None):
        """
        Initialize the Experiment Suite.

        Args:
            workers: Thread cap for the per-n tasks (default min(4, cpu count)).
        """
        self.workers = workers or default_workers()

    def _run(self, label: str, func, *args, **kwargs):
        with ThreadPoolExecutor(max_workers=self.workers) as executor:
            metrics = measure_resources(label, func, *args, mapper=executor.map, **kwargs)
        logger.info(f"Finished {metrics.summary()}")
        return metrics.result

    def run_summability(self, f: HexFunction, method: SummabilityMethod, ns: Sequence[int],
                        p: float = math.inf, N: Optional[int] = None) -> pd.DataFrame:
        """Rows n, error_p of the approximation error of `method` over the sweep."""

        def sweep(mapper):
            return list(mapper(lambda n: summability_error(f, method, n, p, N), ns))

        errors = self._run(f"Summability sweep {method.label}", sweep)
        return pd.DataFrame({"n": list(ns), "error_p": errors})

    def run_lebesgue(self, ns: Sequence[int]) -> ExperimentReport:
        return self._run("Lebesgue sweep", lebesgue_sweep, ns)

    def run_l1growth(self, ns: Sequence[int], N: int = 1025) -> ExperimentReport:
        return self._run("L1 growth sweep", l1_growth, ns, N)

    def run_moments(self, r: int, nu: float, ns: Sequence[int]) -> ExperimentReport:
        return self._run("Jackson moment sweep", moment_sweep, r, nu, ns)

    def run_bernstein(self, ns: Sequence[int], alphas, trials: int = 200, seed: int = 0,
                      p: float = math.inf) -> ExperimentReport:
        return self._run("Bernstein sweep", bernstein_sweep, ns, alphas, trials, seed, p)

    def run_jackson(self, f: HexFunction, r: int, ns: Sequence[int],
                    p: float = math.inf) -> ExperimentReport:
        return self._run("Direct theorem check", direct_check, f, r, ns, p)

    def run_cutoff(self, functions: Sequence[HexFunction], ns: Sequence[int]) -> ExperimentReport:
        return self._run("Smoothed cutoff sweep", cutoff_norm, functions, ns)

    def run_inverse(self, f: HexFunction, r: int, p: float = 2.0,
                    hs: Sequence[float] = (1 / 8, 1 / 16, 1 / 32)) -> ExperimentReport:
        metrics = measure_resources("Inverse theorem check", inverse_check, f, r, p, hs)
        logger.info(f"Finished {metrics.summary()}")
        return metrics.result
