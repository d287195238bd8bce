"""Schema definitions for suites and reports."""

from latticeq.schemas.report import (
    AnharmonicReport,
    ConvergenceReport,
    ConvergenceRow,
    ErrorBound,
    VerificationReport,
    complex_pair,
)
from latticeq.schemas.suite import ParameterType, Suite, SuiteParameter, SuiteResult

__all__ = [
    "AnharmonicReport",
    "ConvergenceReport",
    "ConvergenceRow",
    "ErrorBound",
    "ParameterType",
    "Suite",
    "SuiteParameter",
    "SuiteResult",
    "VerificationReport",
    "complex_pair",
]
