"""Operator suites: Fourier duality, Weyl relations, free propagator.

Parameter schemas are read off the handler signatures and their ``Args``
sections.
"""

from typing import Optional, Sequence

from latticeq.config import RunConfig
from latticeq.schemas.report import VerificationReport
from latticeq.utils.introspection import suite_from_function
from latticeq.verify.operator_checks import (
    DEFAULT_SIZES,
    fourier_check,
    propagator_check,
    weyl_check,
)

PROPAGATOR_DEFAULT_N = 40_000


def _fourier(
    n_values: Sequence[int] = DEFAULT_SIZES,
    trials: int = 10,
    seed: int = 0,
    config: Optional[RunConfig] = None,
) -> VerificationReport:
    """Fourier duality on random states.

    Args:
        n_values: Universe sizes to check
        trials: Random states per universe size
        seed: Seed of the random test states
    """
    config = config or RunConfig()
    return fourier_check(list(n_values) or list(DEFAULT_SIZES), trials, seed, config.tolerances)


def _weyl(
    n_values: Sequence[int] = DEFAULT_SIZES,
    trials: int = 100,
    seed: int = 0,
    config: Optional[RunConfig] = None,
) -> VerificationReport:
    """Weyl relations on random states.

    Args:
        n_values: Universe sizes to check
        trials: Random states for the commutation defect
        seed: Seed of the random test states
    """
    config = config or RunConfig()
    return weyl_check(
        list(n_values) or list(DEFAULT_SIZES), trials, config.h_n, seed, config.tolerances
    )


def _propagator(
    t: float = 1.0,
    x0: int = 0,
    config: Optional[RunConfig] = None,
) -> VerificationReport:
    """Free evolution of a point state.

    Args:
        t: Evolution time (nonzero)
        x0: Lattice point of the initial state u[x0]
    """
    config = config or RunConfig()
    return propagator_check(config.n or PROPAGATOR_DEFAULT_N, t, x0, config.tolerances)


fourier = suite_from_function(
    _fourier,
    name="fourier",
    description="Discrete Fourier duality: inverse after forward, Parseval, dense against FFT path, and the Fourier kernel operator.",
    category="operators",
    tags=["fourier", "fft", "parseval", "duality"],
)

weyl = suite_from_function(
    _weyl,
    name="weyl",
    description="Weyl pair: UV = e^{iνh}VU on random states, isometry of U and V, V diagonal on the momentum basis.",
    category="operators",
    tags=["weyl", "commutation", "unitary"],
)

propagator = suite_from_function(
    _propagator,
    name="propagator",
    description="Spectral free evolution of a point state against the closed-form kernel, and the ω → 0 limit of the harmonic kernel.",
    category="operators",
    tags=["propagator", "kernel", "evolution", "harmonic"],
)
