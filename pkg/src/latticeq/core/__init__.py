"""Lattice universes, exact phases, rational forms and predicates."""

from latticeq.core.forms import (
    LinearForm,
    QuadraticForm,
    dense_domain_membership,
    dense_modulus,
    nearest_dense_point,
    period,
    sample_dense_points,
    single_out_variable,
)
from latticeq.core.phase import PhaseExponent, eval_phase, polynomial_numerators, unit_phases
from latticeq.core.predicates import (
    GaussianPredicate,
    PerturbedGaussianPredicate,
    Predicate,
    SampledPredicate,
    SumPredicate,
    eval_gaussian,
    quadratic_phases,
)
from latticeq.core.universe import (
    ContinuumRef,
    FiniteUniverse,
    Interval,
    divisibility_bound,
    embed_point,
    highly_divisible,
    lattice_distance,
    make_universe,
    max_local_window,
    window_diameter_bound,
)

__all__ = [
    "ContinuumRef",
    "FiniteUniverse",
    "GaussianPredicate",
    "Interval",
    "LinearForm",
    "PerturbedGaussianPredicate",
    "PhaseExponent",
    "Predicate",
    "QuadraticForm",
    "SampledPredicate",
    "SumPredicate",
    "dense_domain_membership",
    "dense_modulus",
    "divisibility_bound",
    "embed_point",
    "eval_gaussian",
    "eval_phase",
    "highly_divisible",
    "lattice_distance",
    "make_universe",
    "max_local_window",
    "nearest_dense_point",
    "period",
    "polynomial_numerators",
    "quadratic_phases",
    "sample_dense_points",
    "single_out_variable",
    "unit_phases",
    "window_diameter_bound",
]
