"""Riemann-sum error bounds."""

from latticeq.core.universe import FiniteUniverse
from latticeq.errors import PreconditionError
from latticeq.quantifier.results import Window
from latticeq.schemas.report import ErrorBound


def riemann_error_bound(M_f: float, window: Window, u: FiniteUniverse) -> float:
    """M_f·(m2 - m1)·spacing/2, the left-rule bound with (m2 - m1)/spacing points."""
    if M_f < 0:
        raise PreconditionError(f"M_f must be nonnegative, got {M_f}")
    return M_f * window.length * u.spacing / 2.0


def error_bound(M_f: float, window: Window, u: FiniteUniverse) -> ErrorBound:
    return ErrorBound(
        M_f=M_f,
        window_length=window.length,
        n=u.n,
        bound=riemann_error_bound(M_f, window, u),
    )
