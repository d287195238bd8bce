"""Report executors: run suites and serialize their reports."""

from pathlib import Path
from typing import Optional

from latticeq.executors.base import BaseExecutor
from latticeq.executors.csv import CSVExecutor, flatten_row, rows_to_csv
from latticeq.executors.json import JSONExecutor
from latticeq.executors.table import TableExecutor
from latticeq.schemas.report import VerificationReport

EXECUTORS: dict[str, type[BaseExecutor]] = {
    "json": JSONExecutor,
    "csv": CSVExecutor,
    "table": TableExecutor,
}


def executor_for(fmt: str) -> BaseExecutor:
    try:
        return EXECUTORS[fmt]()
    except KeyError:
        raise ValueError(f"Unknown format '{fmt}'; choose one of {', '.join(EXECUTORS)}") from None


def emit_report(
    report: VerificationReport, out_dir: str | Path, stem: Optional[str] = None
) -> list[Path]:
    """Write <stem>.json and <stem>.csv into out_dir; returns the written paths."""
    directory = Path(out_dir)
    directory.mkdir(parents=True, exist_ok=True)
    stem = stem or report.kind
    written = []
    for executor in (JSONExecutor(), CSVExecutor()):
        path = directory / f"{stem}.{executor.extension}"
        path.write_text(executor.format_report(report), encoding="utf-8")
        written.append(path)
    return written


__all__ = [
    "BaseExecutor",
    "CSVExecutor",
    "EXECUTORS",
    "JSONExecutor",
    "TableExecutor",
    "emit_report",
    "executor_for",
    "flatten_row",
    "rows_to_csv",
]
