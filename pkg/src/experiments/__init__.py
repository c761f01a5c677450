from .core import ExperimentSuite, error_grid, summability_error
from .utils import SweepMetrics, measure_resources

__all__ = ["ExperimentSuite", "SweepMetrics", "error_grid", "measure_resources", "summability_error"]
