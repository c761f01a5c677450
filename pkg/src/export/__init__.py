from .types import ExportPayload
from .core import Exporter, make_header
from .csv import read_grid_csv
from .parquet import read_header

__all__ = ["ExportPayload", "Exporter", "make_header", "read_grid_csv", "read_header"]
