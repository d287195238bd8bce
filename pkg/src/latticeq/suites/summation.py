"""
Summation suites: the Gauss lemma (with the discrete delta), local = global,
and finite-to-continuum convergence.
"""

from fractions import Fraction
from typing import Optional

from latticeq.config import RunConfig
from latticeq.core.forms import LinearForm, sample_dense_points
from latticeq.core.universe import make_universe
from latticeq.errors import PreconditionError
from latticeq.schemas.report import VerificationReport
from latticeq.schemas.suite import ParameterType, Suite, SuiteParameter
from latticeq.verify.convergence import DEFAULT_SWEEP, QUANTITIES, convergence_sweep_async
from latticeq.verify.gauss import (
    delta_check,
    gauss_continuum_check,
    gauss_lemma_check,
    gaussian_in_k,
)
from latticeq.verify.local_global import local_global_check

GAUSS_DEFAULT_N = 1_441_440
DELTA_DEFAULT_N = 10_000
LOCAL_GLOBAL_DEFAULT_N = 1_000_000


def _rational(text: str, name: str) -> Fraction:
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError):
        raise PreconditionError(f"{name} must be a rational like 3/2 or 0.5, got {text!r}") from None


def _linear_form(b: Optional[list[str]]) -> LinearForm:
    return LinearForm.of(*(_rational(c, "b") for c in (b or [])))


def _delta_points(n: int, b_values: list[Fraction]) -> list[int]:
    """Small p plus, for every b dividing n, the p with b·p = n."""
    points = [0, 1, 2, 3]
    for b in b_values:
        if b.denominator == 1 and n % b.numerator == 0:
            points.append(n // b.numerator)
    return sorted(set(points))


def _gauss(
    a: str = "1",
    b: Optional[list[str]] = None,
    samples: int = 5,
    delta_b: Optional[list[str]] = None,
    delta_n: int = DELTA_DEFAULT_N,
    continuum: bool = True,
    config: Optional[RunConfig] = None,
) -> VerificationReport:
    config = config or RunConfig()
    a_value = _rational(a, "a")
    b_form = _linear_form(b if b is not None else ["1"])
    n = config.n or GAUSS_DEFAULT_N
    if samples < 1:
        raise PreconditionError(f"samples must be >= 1, got {samples}")

    points = sample_dense_points(a_value, b_form, samples, member=True)
    if b_form.arity:
        points += sample_dense_points(a_value, b_form, samples, member=False)
    parts = [gauss_lemma_check(a_value, b_form, points, n, config.h_n, config.tolerances)]
    if continuum:
        parts.append(
            gauss_continuum_check(a_value, b_form, points, n, config.h_n, config.tolerances)
        )

    b_values = [_rational(v, "delta_b") for v in (delta_b if delta_b is not None else ["1", "2", "5"])]
    if b_values:
        parts.append(
            delta_check(b_values, _delta_points(delta_n, b_values), delta_n, config.tolerances)
        )
    return VerificationReport.combine("gauss", parts)


async def _converge(
    quantity: str = "gaussian-norm",
    n_values: Optional[list[int]] = None,
    config: Optional[RunConfig] = None,
) -> VerificationReport:
    config = config or RunConfig()
    sweep = await convergence_sweep_async(
        quantity, n_values or list(DEFAULT_SWEEP), h_n=config.h_n
    )
    return sweep.to_verification_report(config.tolerances)


def _local_global(
    a: str = "1",
    b: Optional[list[str]] = None,
    p: Optional[list[int]] = None,
    config: Optional[RunConfig] = None,
) -> VerificationReport:
    config = config or RunConfig()
    b_form = _linear_form(b)
    params = [int(v) for v in (p or [])]
    if len(params) != b_form.arity:
        raise PreconditionError(
            f"b has {b_form.arity} coefficient(s) but {len(params)} value(s) of p were given"
        )
    u = make_universe(config.n or LOCAL_GLOBAL_DEFAULT_N, config.h_n)
    pred = gaussian_in_k(_rational(a, "a"), b_form)
    return local_global_check(pred, params, u, c_tail=config.c_tail)


gauss = Suite(
    name="gauss",
    description="Gauss summation lemma: one-period sums against the closed form on the d-dense set, vanishing full-cycle sums off it, the scaled sums against the continuum Gauss integral, and the discrete delta identity.",
    parameters=[
        SuiteParameter(
            name="a",
            type=ParameterType.STRING,
            description="Leading rational coefficient a > 0 (e.g. '1', '3/2')",
            required=False,
            default="1",
        ),
        SuiteParameter(
            name="b",
            type=ParameterType.ARRAY,
            items_type=ParameterType.STRING,
            description="Rational coefficients of the linear form b(p̄) (e.g. ['1'] or ['1/2', '3'])",
            required=False,
            default=["1"],
        ),
        SuiteParameter(
            name="samples",
            type=ParameterType.INTEGER,
            description="Number of points sampled inside (and outside) the d-dense set",
            required=False,
            default=5,
        ),
        SuiteParameter(
            name="delta_b",
            type=ParameterType.ARRAY,
            items_type=ParameterType.STRING,
            description="Values of b for the discrete delta identity (empty to skip)",
            required=False,
            default=["1", "2", "5"],
        ),
        SuiteParameter(
            name="delta_n",
            type=ParameterType.INTEGER,
            description="Universe size for the discrete delta identity",
            required=False,
            default=DELTA_DEFAULT_N,
        ),
        SuiteParameter(
            name="continuum",
            type=ParameterType.BOOLEAN,
            description="Also compare sqrt(2π)·E^glob with the continuum Gauss integral (a > 0)",
            required=False,
            default=True,
        ),
    ],
    category="summation",
    tags=["gauss", "closed-form", "delta", "exact"],
).set_handler(_gauss)


local_global = Suite(
    name="local-global",
    description="Local quantifier E^(-m,m) against sqrt(2π)·E^glob for a Gaussian predicate; tail gaps held to c_tail/(a·m).",
    parameters=[
        SuiteParameter(
            name="a",
            type=ParameterType.STRING,
            description="Leading rational coefficient a > 0",
            required=False,
            default="1",
        ),
        SuiteParameter(
            name="b",
            type=ParameterType.ARRAY,
            items_type=ParameterType.STRING,
            description="Rational coefficients of b(p̄); empty for b = 0",
            required=False,
            default=[],
        ),
        SuiteParameter(
            name="p",
            type=ParameterType.ARRAY,
            items_type=ParameterType.INTEGER,
            description="Parameter point p̄, one integer per coefficient of b",
            required=False,
            default=[],
        ),
    ],
    category="summation",
    tags=["local", "global", "tail", "gaussian"],
).set_handler(_local_global)


converge = Suite(
    name="converge",
    description="Finite-to-continuum convergence: windowed quantifier values against quadrature over a sweep of n, with a fitted decay exponent.",
    parameters=[
        SuiteParameter(
            name="quantity",
            type=ParameterType.STRING,
            description="Test quantity",
            required=False,
            default="gaussian-norm",
            enum=sorted(QUANTITIES),
        ),
        SuiteParameter(
            name="n_values",
            type=ParameterType.ARRAY,
            items_type=ParameterType.INTEGER,
            description="Universe sizes of the sweep (distinct, even)",
            required=False,
            default=list(DEFAULT_SWEEP),
        ),
    ],
    category="summation",
    tags=["convergence", "riemann", "quadrature"],
).set_handler(_converge)
