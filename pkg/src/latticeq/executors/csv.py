"""CSV report executor: one line per report row, nested values flattened."""

import csv
import io
from typing import Any, Iterable, Optional, Sequence

from latticeq.errors import PreconditionError
from latticeq.executors.base import BaseExecutor
from latticeq.schemas.report import VerificationReport
from latticeq.schemas.suite import Suite

# (x, y) columns plotted by default for each report kind
DEFAULT_PLOT_COLUMNS: dict[str, tuple[str, ...]] = {
    "converge": ("n", "error"),
    "local-global": ("m", "tail_gap"),
    "anharmonic-continuum": ("lambda_h", "residual"),
    "anharmonic-scaling": ("lambda_h", "normalized"),
    "delta": ("p", "residual"),
    "gauss": ("p.0", "residual"),
}


def flatten_row(row: dict[str, Any], prefix: str = "") -> dict[str, Any]:
    """Nested dicts become ``key.sub`` and lists ``key.0``, ``key.1``, ..."""
    flat: dict[str, Any] = {}
    for key, value in row.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            flat.update(flatten_row(value, name + "."))
        elif isinstance(value, (list, tuple)):
            flat.update(flatten_row({str(i): v for i, v in enumerate(value)}, name + "."))
        else:
            flat[name] = value
    return flat


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def rows_to_csv(rows: Iterable[dict[str, Any]], columns: Optional[Sequence[str]] = None) -> str:
    flat = [flatten_row(r) for r in rows]
    if columns is None:
        header: list[str] = []
        for row in flat:
            header.extend(k for k in row if k not in header)
    else:
        header = list(columns)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in flat:
        writer.writerow([_cell(row.get(col)) for col in header])
    return buffer.getvalue()


SUITE_COLUMNS = ("suite", "parameter", "type", "default", "description")


def _suite_rows(suite: Suite) -> list[dict[str, Any]]:
    return [
        {
            "suite": suite.name,
            "parameter": p.name,
            "type": p.type.value,
            "default": p.default,
            "description": p.description,
        }
        for p in suite.parameters
    ]


class CSVExecutor(BaseExecutor):
    """Reports as CSV tables of their rows, for spreadsheets and plotting."""

    extension = "csv"

    def format_suite(self, suite: Suite) -> str:
        return rows_to_csv(_suite_rows(suite), SUITE_COLUMNS)

    def format_catalog(self, suites: list[Suite]) -> str:
        return rows_to_csv([row for s in suites for row in _suite_rows(s)], SUITE_COLUMNS)

    def format_report(self, report: VerificationReport) -> str:
        return rows_to_csv(report.rows)

    def parse(self, text: str) -> list[dict[str, str]]:
        return list(csv.DictReader(io.StringIO(text)))

    def plot_data(self, report: VerificationReport, columns: Optional[Sequence[str]] = None) -> str:
        """Selected columns of every row; defaults depend on the report kind."""
        if not columns:
            if report.kind not in DEFAULT_PLOT_COLUMNS:
                raise PreconditionError(
                    f"No default plot columns for report kind '{report.kind}'; pass --columns"
                )
            columns = DEFAULT_PLOT_COLUMNS[report.kind]
        flat = [flatten_row(r) for r in report.rows]
        available = {k for row in flat for k in row}
        missing = [c for c in columns if c not in available]
        if missing:
            raise PreconditionError(
                f"Report '{report.kind}' has no column(s) {', '.join(missing)}; "
                f"available: {', '.join(sorted(available))}"
            )
        return rows_to_csv(report.rows, columns)
