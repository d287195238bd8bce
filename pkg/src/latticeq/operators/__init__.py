"""State vectors, the Weyl pair, the twisted Fourier transform and kernels."""

from latticeq.operators.fourier import (
    evolve_free,
    fourier_forward,
    fourier_inverse,
    momentum_index,
    momentum_of,
    momentum_vector,
    v_eigenvalue,
)
from latticeq.operators.kernels import (
    KERNELS,
    KernelOperator,
    TabulatedPredicate,
    apply_kernel,
    apply_kernel_at,
    free_propagator_kernel,
    harmonic_kernel,
    kernel_by_name,
)
from latticeq.operators.state import StateVector, relative_defect
from latticeq.operators.weyl import commutation_defect, commutation_phase, weyl_u, weyl_v

__all__ = [
    "KERNELS",
    "KernelOperator",
    "StateVector",
    "TabulatedPredicate",
    "apply_kernel",
    "apply_kernel_at",
    "commutation_defect",
    "commutation_phase",
    "evolve_free",
    "fourier_forward",
    "fourier_inverse",
    "free_propagator_kernel",
    "harmonic_kernel",
    "kernel_by_name",
    "momentum_index",
    "momentum_of",
    "momentum_vector",
    "relative_defect",
    "v_eigenvalue",
    "weyl_u",
    "weyl_v",
]
