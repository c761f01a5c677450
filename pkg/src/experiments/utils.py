import os
import time
from dataclasses import dataclass
from typing import Any

import psutil


@dataclass
class SweepMetrics:
    """Resource use of one experiment sweep. Never part of a result."""

    label: str
    result: Any
    rows: int
    execution_time: float
    peak_memory_mb: float
    memory_increase_mb: float
    cpu_percent: float

    @property
    def seconds_per_row(self) -> float:
        return self.execution_time / self.rows if self.rows else self.execution_time

    def summary(self) -> str:
        return (f"{self.label}: {self.rows} row(s) in {self.execution_time:.2f}s "
                f"({self.seconds_per_row:.3f}s/row), {self.peak_memory_mb:.1f} MB "
                f"(+{self.memory_increase_mb:.1f}), CPU {self.cpu_percent:.0f}%")


def count_rows(result: Any) -> int:
    """Rows of an ExperimentReport, or the length of a list or frame."""
    rows = getattr(result, "rows", None)
    if isinstance(rows, list):
        return len(rows)
    try:
        return len(result)
    except TypeError:
        return 1


def measure_resources(label: str, func, *args, **kwargs) -> SweepMetrics:
    """Run the sweep func and record wall time, resident memory and CPU usage."""
    process = psutil.Process(os.getpid())
    process.cpu_percent(interval=None)
    mem_before = process.memory_info().rss / (1024 * 1024)

    start_time = time.perf_counter()
    result = func(*args, **kwargs)
    execution_time = time.perf_counter() - start_time

    mem_after = process.memory_info().rss / (1024 * 1024)
    return SweepMetrics(
        label=label,
        result=result,
        rows=count_rows(result),
        execution_time=execution_time,
        peak_memory_mb=mem_after,
        memory_increase_mb=mem_after - mem_before,
        cpu_percent=process.cpu_percent(interval=None),
    )
