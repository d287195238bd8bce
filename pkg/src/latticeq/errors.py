"""Exception hierarchy.

Every library error is a ValueError carrying a message that names the failed
condition. The CLI maps the classes below onto its exit codes.
"""


class LatticeError(ValueError):
    """Base class for all latticeq errors."""


class PreconditionError(LatticeError):
    """An operation was called outside its domain (odd n, bad window, ...)."""


class TermsCeilingError(PreconditionError):
    """A summation would exceed the configured terms ceiling."""

    def __init__(self, terms: int, ceiling: int) -> None:
        super().__init__(
            f"Summation of {terms} terms exceeds the configured ceiling of "
            f"{ceiling} terms; raise terms_ceiling to run it"
        )
        self.terms = terms
        self.ceiling = ceiling


class DSLSyntaxError(LatticeError):
    """A predicate expression failed to parse."""

    def __init__(self, message: str, line: int, col: int) -> None:
        super().__init__(f"{line}:{col}: {message}")
        self.line = line
        self.col = col


class NormalizationError(LatticeError):
    """An expression cannot be brought into polynomial-exponential normal form."""


def error_kind(exc: BaseException) -> str:
    """Classify an exception for SuiteResult and CLI exit codes."""
    if isinstance(exc, (DSLSyntaxError, NormalizationError)):
        return "parse"
    if isinstance(exc, OSError):
        return "io"
    if isinstance(exc, ValueError):
        return "precondition"
    return "internal"
