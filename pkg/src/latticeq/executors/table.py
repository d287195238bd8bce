"""Plain-text table executor for terminals."""

from typing import Any

from latticeq.executors.base import BaseExecutor
from latticeq.executors.csv import flatten_row
from latticeq.schemas.report import VerificationReport
from latticeq.schemas.suite import Suite


def _text(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


class TableExecutor(BaseExecutor):
    extension = "txt"

    def format_suite(self, suite: Suite) -> str:
        lines = [f"{suite.name}: {suite.description}"]
        for p in suite.parameters:
            default = "" if p.required else f" (default {p.default!r})"
            lines.append(f"  {p.flag:<14} {p.type.value:<8} {p.description}{default}")
        return "\n".join(lines)

    def format_report(self, report: VerificationReport) -> str:
        flat = [flatten_row(r) for r in report.rows]
        header: list[str] = []
        for row in flat:
            header.extend(k for k in row if k not in header)
        cells = [[_text(row.get(col)) for col in header] for row in flat]
        widths = [max([len(col)] + [len(r[i]) for r in cells]) for i, col in enumerate(header)]

        lines = [f"{report.kind}: {'PASS' if report.passed else 'FAIL'}"]
        lines.append("  ".join(col.rjust(w) for col, w in zip(header, widths)))
        for r in cells:
            lines.append("  ".join(c.rjust(w) for c, w in zip(r, widths)))
        return "\n".join(lines) + "\n"
