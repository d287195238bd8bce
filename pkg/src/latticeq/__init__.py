"""latticeq - finite lattice universes, Gaussian quantifiers and their verification."""

from latticeq.config import RunConfig, Tolerances
from latticeq.core.universe import FiniteUniverse, make_universe
from latticeq.errors import LatticeError, PreconditionError
from latticeq.executors.base import BaseExecutor
from latticeq.registry.registry import SuiteRegistry
from latticeq.schemas.report import VerificationReport
from latticeq.schemas.suite import Suite, SuiteParameter, SuiteResult

__version__ = "0.1.0"

__all__ = [
    "BaseExecutor",
    "FiniteUniverse",
    "LatticeError",
    "PreconditionError",
    "RunConfig",
    "Suite",
    "SuiteParameter",
    "SuiteRegistry",
    "SuiteResult",
    "Tolerances",
    "VerificationReport",
    "make_universe",
]
