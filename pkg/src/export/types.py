from typing import Any, Dict, List, Optional

import pandas as pd


class ExportPayload:
    """A result ready to be written in any output format.

    Attributes:
        name: Short name of the result, used as the markdown title.
        frame: Row table written by the csv, parquet and markdown writers.
        document: JSON body; defaults to {"rows": [...]} built from `frame`.
        summary: Scalar results (fitted rates, constants) listed by markdown.
        notes: Free-text remarks listed by markdown.
        preamble: Extra "# " comment lines the csv writer puts after the header.
    """

    def __init__(self, name: str, frame: pd.DataFrame, document: Optional[Dict[str, Any]] = None,
                 summary: Optional[Dict[str, Any]] = None, notes: Optional[List[str]] = None,
                 preamble: Optional[List[str]] = None):
        self.name = name
        self.frame = frame
        self.document = document if document is not None else {"rows": frame.to_dict(orient="records")}
        self.summary = dict(summary or {})
        self.notes = list(notes or [])
        self.preamble = list(preamble or [])

    @classmethod
    def from_report(cls, report) -> "ExportPayload":
        """Payload of an ExperimentReport."""
        summary = {**report.fitted, **report.constants}
        return cls(report.method, report.to_frame(), report.to_dict(), summary, report.notes)

    @classmethod
    def from_table(cls, name: str, table) -> "ExportPayload":
        """Payload of anything with to_frame() and to_dict(), e.g. a coefficient table."""
        return cls(name, table.to_frame(), table.to_dict(), {"entries": len(table)})

    @classmethod
    def from_grid(cls, name: str, grid) -> "ExportPayload":
        """Payload of a GridFunction: an N=<N> comment line, then rows a,b,re,im."""
        return cls(name, grid.to_frame(), grid.to_dict(), {"N": grid.N}, preamble=[f"N={grid.N}"])

    def __repr__(self):
        return f"ExportPayload(name={self.name}, rows={len(self.frame)})"
