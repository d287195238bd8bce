"""JSON report executor."""

import json
from typing import Any

from latticeq.executors.base import BaseExecutor
from latticeq.schemas.report import VerificationReport
from latticeq.schemas.suite import Suite


class JSONExecutor(BaseExecutor):
    """Reports as indented JSON documents; the primary, reproducible format."""

    extension = "json"

    def format_suite(self, suite: Suite) -> dict[str, Any]:
        return {
            "name": suite.name,
            "description": suite.description,
            "parameters": suite.to_json_schema(),
            "metadata": {
                "category": suite.category,
                "tags": suite.tags,
                "version": suite.version,
            },
        }

    def format_catalog(self, suites: list[Suite]) -> str:
        return json.dumps(self.format_suites(suites), indent=2, ensure_ascii=False) + "\n"

    def format_report(self, report: VerificationReport) -> str:
        return report.to_json() + "\n"

    def parse(self, text: str) -> VerificationReport:
        return VerificationReport.from_json(text)
