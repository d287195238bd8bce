"""Gauss summation lemma and discrete delta checks."""

import logging
import math
from fractions import Fraction
from typing import Any, Optional, Sequence

import numpy as np

from latticeq.config import Tolerances
from latticeq.core.forms import LinearForm, QuadraticForm, dense_domain_membership
from latticeq.core.predicates import GaussianPredicate
from latticeq.core.universe import make_universe
from latticeq.errors import PreconditionError
from latticeq.quantifier.closed_forms import (
    discrete_delta_sum,
    gauss_closed_form_continuum,
    gauss_closed_form_discrete,
)
from latticeq.quantifier.quantifiers import full_cycle_sum, global_quantify
from latticeq.schemas.report import VerificationReport, complex_pair

logger = logging.getLogger(__name__)

# summand-vs-integrand comparison uses k in [-SAMPLING_POINTS, SAMPLING_POINTS]
SAMPLING_POINTS = 8


def gaussian_in_k(a: Any, b_form: LinearForm) -> GaussianPredicate:
    """e^{-πi(a k² + 2k·b(p̄))/n} as a predicate of arity 1 + arity(b)."""
    a = Fraction(a)
    terms: dict[tuple[int, int], Fraction] = {(0, 0): a}
    for j, coeff in enumerate(b_form.coeffs, start=1):
        if coeff:
            terms[(0, j)] = 2 * coeff
    return GaussianPredicate(form=QuadraticForm.from_terms(1 + b_form.arity, terms))


def gauss_lemma_check(
    a: Any,
    b_form: LinearForm,
    samples: Sequence[Sequence[int]],
    n: int,
    h_n: int = 1,
    tolerances: Optional[Tolerances] = None,
) -> VerificationReport:
    """Compare one-period sums with the closed form on the d-dense set.

    Points outside the d-dense set are checked through the full-cycle sum,
    which vanishes there; their one-period value is reported alongside.
    """
    tol = tolerances or Tolerances()
    a = Fraction(a)
    u = make_universe(n, h_n)
    pred = gaussian_in_k(a, b_form)
    rows: list[dict[str, Any]] = []
    for point in samples:
        params = tuple(int(p) for p in point)
        member = dense_domain_membership(params, a, b_form)
        bval = b_form.evaluate(params)
        result = global_quantify(pred, u, params)
        row: dict[str, Any] = {
            "p": list(params),
            "member": member,
            "b": str(bval),
            "value": complex_pair(result.complex_value),
            "fp_err": result.fp_error_estimate,
        }
        if member:
            closed = gauss_closed_form_discrete(a, bval, n)
            residual = abs(result.complex_value - closed)
            row.update(closed_form=complex_pair(closed), residual=residual)
            row["pass"] = residual <= tol.gauss_dense
        else:
            cycle = full_cycle_sum(pred, u, params)
            magnitude = abs(cycle.complex_value)
            row.update(cycle_terms=cycle.terms, cycle_magnitude=magnitude)
            row["pass"] = magnitude <= tol.gauss_zero
            if abs(result.complex_value) > tol.gauss_zero:
                logger.warning(
                    "One-period sum at p=%s (outside the d-dense set) is %.3g; "
                    "the full-cycle sum is %.3g",
                    params,
                    abs(result.complex_value),
                    magnitude,
                )
        rows.append(row)
    return VerificationReport(
        kind="gauss",
        params={"a": str(a), "b": [str(c) for c in b_form.coeffs], "n": n, "h_n": h_n},
        rows=rows,
        passed=all(r["pass"] for r in rows),
        tolerances={"gauss_dense": tol.gauss_dense, "gauss_zero": tol.gauss_zero},
    )


def gauss_continuum_check(
    a: Any,
    b_form: LinearForm,
    samples: Sequence[Sequence[int]],
    n: int,
    h_n: int = 1,
    tolerances: Optional[Tolerances] = None,
) -> VerificationReport:
    """√(2π/n)·Σ over one period against ∫ e^{-i(a x² + 2 x b)/2} dx, for a > 0.

    The continuum b is b(p̄) at the embedded parameters ȳ = p̄·spacing. Points
    outside the d-dense set are skipped. Each row also records how far the
    lattice summand is from the continuum integrand sampled at k·spacing.
    """
    tol = tolerances or Tolerances()
    a = Fraction(a)
    if a <= 0:
        raise PreconditionError(f"Continuum Gauss comparison needs a > 0, got {a}")
    u = make_universe(n, h_n)
    s = u.spacing
    pred = gaussian_in_k(a, b_form)
    k = np.arange(max(u.lo, -SAMPLING_POINTS), min(u.hi, SAMPLING_POINTS) + 1, dtype=np.int64)
    rows: list[dict[str, Any]] = []
    for point in samples:
        params = tuple(int(p) for p in point)
        if not dense_domain_membership(params, a, b_form):
            logger.debug("Skipping p=%s outside the d-dense set", params)
            continue
        bval = b_form.evaluate(params)
        lattice = math.sqrt(2 * math.pi) * global_quantify(pred, u, params).complex_value
        integral = gauss_closed_form_continuum(
            -float(a) / (2 * math.pi), -float(bval) * s / (2 * math.pi)
        )
        embedded = [p * s for p in params]
        sampled = np.array([pred.continuum_value([kk * s, *embedded]) for kk in k.tolist()])
        sampling_defect = float(np.max(np.abs(pred.lattice_values(k, u, params) - sampled)))
        residual = abs(lattice - integral)
        rows.append(
            {
                "p": list(params),
                "b": str(bval),
                "lattice": complex_pair(lattice),
                "integral": complex_pair(integral),
                "residual": residual,
                "sampling_defect": sampling_defect,
                "pass": residual <= tol.gauss_continuum and sampling_defect <= tol.gauss_continuum,
            }
        )
    if not rows:
        raise PreconditionError("No sampled point lies in the d-dense set")
    return VerificationReport(
        kind="gauss-continuum",
        params={"a": str(a), "b": [str(c) for c in b_form.coeffs], "n": n, "h_n": h_n},
        rows=rows,
        passed=all(r["pass"] for r in rows),
        tolerances={"gauss_continuum": tol.gauss_continuum},
    )


def delta_check(
    b_values: Sequence[Any],
    p_values: Sequence[int],
    n: int,
    tolerances: Optional[Tolerances] = None,
) -> VerificationReport:
    """Both sides of the discrete delta identity for every (b, p)."""
    tol = tolerances or Tolerances()
    u = make_universe(n)
    rows: list[dict[str, Any]] = []
    for b in b_values:
        for p in p_values:
            lhs, rhs = discrete_delta_sum(b, p, u)
            residual = abs(lhs - rhs)
            rows.append(
                {
                    "b": str(Fraction(b)),
                    "p": int(p),
                    "lhs": complex_pair(lhs),
                    "rhs": complex_pair(rhs),
                    "residual": residual,
                    "pass": residual <= tol.delta,
                }
            )
    return VerificationReport(
        kind="delta",
        params={"b": [str(Fraction(b)) for b in b_values], "p": list(p_values), "n": n},
        rows=rows,
        passed=all(r["pass"] for r in rows),
        tolerances={"delta": tol.delta},
    )
