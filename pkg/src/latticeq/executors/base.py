"""Base executor interface."""

import logging
from abc import ABC, abstractmethod
from typing import Any, Optional

from latticeq.config import RunConfig
from latticeq.quantifier.summation import use_terms_ceiling, use_threads
from latticeq.schemas.report import VerificationReport
from latticeq.schemas.suite import Suite, SuiteResult

logger = logging.getLogger(__name__)


class BaseExecutor(ABC):
    """
    Abstract base class for report executors.

    Executors are responsible for:
    1. Describing suites in their output format
    2. Running suites under a RunConfig and returning results
    3. Serializing reports (and parsing them back)
    """

    extension: str = "txt"

    @abstractmethod
    def format_suite(self, suite: Suite) -> Any:
        """Describe a suite and its parameters."""

    def format_suites(self, suites: list[Suite]) -> list[Any]:
        return [self.format_suite(s) for s in suites]

    def format_catalog(self, suites: list[Suite]) -> str:
        """Describe several suites as one document."""
        return "\n\n".join(str(s) for s in self.format_suites(suites)) + "\n"

    @abstractmethod
    def format_report(self, report: VerificationReport) -> str:
        """Serialize a report."""

    def format_result(self, result: SuiteResult) -> str:
        """Serialize a suite result; failures become a one-line message."""
        if result.success and result.data is not None:
            return self.format_report(result.data)
        return f"error ({result.error_kind}): {result.error}\n"

    async def execute(
        self, suite: Suite, arguments: dict[str, Any], config: Optional[RunConfig] = None
    ) -> SuiteResult:
        """
        Run a suite with the given arguments.

        Summations inside the run use the configured thread count and terms
        ceiling. The effective configuration is echoed into the report.
        """
        config = config or RunConfig()
        errors = self.validate_arguments(suite, arguments)
        if errors:
            return SuiteResult.fail("; ".join(errors), "precondition")

        logger.debug("Running suite %s with %s", suite.name, sorted(arguments))
        with use_threads(config.threads), use_terms_ceiling(config.terms_ceiling):
            result = await suite.execute(**arguments, config=config)

        if result.success and result.data is not None:
            result = SuiteResult.ok(result.data.with_params({"config": config.echo()}))
        return result

    def validate_arguments(self, suite: Suite, arguments: dict[str, Any]) -> list[str]:
        """
        Validate arguments against the suite's parameters.

        Returns:
            List of validation errors (empty if valid)
        """
        errors: list[str] = []

        for param in suite.parameters:
            if param.required and param.name not in arguments:
                errors.append(f"Missing required parameter: {param.name}")

        known = {p.name for p in suite.parameters}
        for name in arguments:
            if name not in known:
                errors.append(f"Unknown parameter: {name}")

        return errors
