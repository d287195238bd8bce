"""Built-in verification suites."""

from latticeq.suites.anharmonic import anharmonic
from latticeq.suites.operators import fourier, propagator, weyl
from latticeq.suites.summation import converge, gauss, local_global

BUILTIN_SUITES = [gauss, local_global, converge, fourier, weyl, propagator, anharmonic]

__all__ = [
    "BUILTIN_SUITES",
    "anharmonic",
    "converge",
    "fourier",
    "gauss",
    "local_global",
    "propagator",
    "weyl",
]
