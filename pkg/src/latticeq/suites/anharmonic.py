"""Anharmonic suite: the perturbed Gaussian global sum and its first-order expansion."""

import logging
from typing import Optional

from latticeq.config import RunConfig
from latticeq.errors import PreconditionError
from latticeq.schemas.report import VerificationReport
from latticeq.schemas.suite import ParameterType, Suite, SuiteParameter
from latticeq.verify.anharmonic import (
    DEFAULT_PERIOD_MULTIPLE,
    anharmonic_check,
    anharmonic_continuum_check,
    anharmonic_scaling_grid,
    auto_L,
)

logger = logging.getLogger(__name__)

# the lattice T0 is an exact Gauss sum; only rounding separates it from the closed form
T0_TOLERANCE = 1e-8


def _resolve_L(L: str, period_multiple: int, lambda_h: float) -> Optional[int]:
    text = str(L).strip().lower()
    if text == "auto":
        return auto_L(period_multiple, lambda_h)
    if text in ("none", "inf"):
        return None
    try:
        return int(text)
    except ValueError:
        raise PreconditionError(f"L must be 'auto', 'none' or a positive integer, got {L!r}") from None


def _anharmonic(
    H: int = 10_000,
    L: str = "auto",
    lambda_h: float = 0.01,
    continuum: bool = True,
    scaling: bool = False,
    config: Optional[RunConfig] = None,
) -> VerificationReport:
    config = config or RunConfig()
    n = config.n or 2 * H * DEFAULT_PERIOD_MULTIPLE
    if n % (2 * H):
        raise PreconditionError(f"n={n} must be a multiple of 2H={2 * H}")
    period_multiple = n // (2 * H)
    resolved = _resolve_L(L, period_multiple, lambda_h)
    logger.info("Anharmonic H=%d n=%d L=%s", H, n, resolved)

    lattice = anharmonic_check(H, resolved, n, lambda_h_max=config.lambda_h_max)
    parts = [lattice.to_verification_report(T0_TOLERANCE)]
    if continuum and lattice.lambda_h > 0:
        parts.append(anharmonic_continuum_check([lattice.lambda_h], config.tolerances))
    if scaling:
        parts.append(anharmonic_scaling_grid(tolerances=config.tolerances))
    return VerificationReport.combine("anharmonic", parts)


anharmonic = Suite(
    name="anharmonic",
    description="Perturbed Gaussian e^{-πiH(k²+k⁴/L)/n}: T0/Tφ split, first-order expansion of the global sum, the continuum coefficient and the Tφ scaling grid.",
    parameters=[
        SuiteParameter(
            name="H",
            type=ParameterType.INTEGER,
            description="Integer H, h = 1/(2πH)",
            required=False,
            default=10_000,
        ),
        SuiteParameter(
            name="L",
            type=ParameterType.STRING,
            description="Quartic denominator: a positive integer, 'auto' (from lambda_h) or 'none'",
            required=False,
            default="auto",
        ),
        SuiteParameter(
            name="lambda_h",
            type=ParameterType.NUMBER,
            description="Target perturbation strength λh when L is 'auto'",
            required=False,
            default=0.01,
        ),
        SuiteParameter(
            name="continuum",
            type=ParameterType.BOOLEAN,
            description="Also check the continuum first-order coefficient at the realized λh",
            required=False,
            default=True,
        ),
        SuiteParameter(
            name="scaling",
            type=ParameterType.BOOLEAN,
            description="Also run the |Tφ| scaling grid over H and λh",
            required=False,
            default=False,
        ),
    ],
    category="perturbation",
    tags=["anharmonic", "perturbation", "gaussian", "quartic"],
).set_handler(_anharmonic)
