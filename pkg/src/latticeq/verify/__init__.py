"""Verification harnesses producing structured reports."""

from latticeq.verify.anharmonic import (
    anharmonic_check,
    anharmonic_continuum_check,
    anharmonic_scaling_grid,
    auto_L,
)
from latticeq.verify.bounds import error_bound, riemann_error_bound
from latticeq.verify.convergence import (
    QUANTITIES,
    Quantity,
    convergence_sweep,
    convergence_sweep_async,
    fit_decay_exponent,
    quantity_by_name,
)
from latticeq.verify.gauss import (
    delta_check,
    gauss_continuum_check,
    gauss_lemma_check,
    gaussian_in_k,
)
from latticeq.verify.local_global import local_global_check
from latticeq.verify.operator_checks import fourier_check, propagator_check, weyl_check

__all__ = [
    "QUANTITIES",
    "Quantity",
    "anharmonic_check",
    "anharmonic_continuum_check",
    "anharmonic_scaling_grid",
    "auto_L",
    "convergence_sweep",
    "convergence_sweep_async",
    "delta_check",
    "error_bound",
    "fit_decay_exponent",
    "fourier_check",
    "gauss_continuum_check",
    "gauss_lemma_check",
    "gaussian_in_k",
    "local_global_check",
    "propagator_check",
    "quantity_by_name",
    "riemann_error_bound",
    "weyl_check",
]
