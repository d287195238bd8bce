"""Closed-form Gauss sums and integrals, and the discrete delta."""

import cmath
import math
from fractions import Fraction
from typing import Any

import numpy as np
from pydantic import BaseModel, Field

from latticeq import sign_ledger
from latticeq.core.phase import eval_phase
from latticeq.core.predicates import quadratic_phases
from latticeq.core.universe import FiniteUniverse
from latticeq.errors import PreconditionError
from latticeq.quantifier.summation import check_terms, deterministic_sum


def _rational(value: Any) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


def gauss_closed_form_discrete(a: Any, bval: Any, n: int) -> complex:
    """sqrt(1/a)·e^{σ iπ/4}·e^{πi bval²/(a n)} for the one-period discrete Gauss sum.

    Requires n/(2a) to be a positive integer and bval/a an integer.
    """
    a = _rational(a)
    bval = _rational(bval)
    if a <= 0:
        raise PreconditionError(f"Discrete Gauss closed form needs a > 0, got {a}")
    half = Fraction(n) / (2 * a)
    if half.denominator != 1:
        raise PreconditionError(f"n/(2a) = {half} is not an integer for a={a}, n={n}")
    if (bval / a).denominator != 1:
        raise PreconditionError(f"b/a = {bval / a} is not an integer; b lies outside the d-dense set")
    # e^{σ iπ/4} = e^{-πi(-σ/4)}; e^{+πi b²/(a n)} = e^{-πi(-b²/(a n))}
    rotation = eval_phase(Fraction(-sign_ledger.DISCRETE_GAUSS_PHASE, 4))
    shift = eval_phase(-sign_ledger.DISCRETE_SHIFT_PHASE * bval * bval / (a * n))
    return math.sqrt(1.0 / float(a)) * rotation * shift


def gauss_closed_form_continuum(a: float, b: float) -> complex:
    """∫ e^{πi(a x² + 2 b x)} dx = |a|^{-1/2}·e^{σ' iπ/4 sign a}·e^{-πi b²/a}."""
    if a == 0:
        raise PreconditionError("Continuum Gauss integral needs a ≠ 0 (a = 0 is the delta case)")
    sign = 1.0 if a > 0 else -1.0
    rotation = cmath.exp(1j * math.pi / 4 * sign_ledger.CONTINUUM_FRESNEL_PHASE * sign)
    return abs(a) ** -0.5 * rotation * cmath.exp(-1j * math.pi * b * b / a)


class DiscreteDelta(BaseModel):
    """δ^{(n)}: sqrt(n) at p ≡ 0 (mod n), 0 elsewhere."""

    n: int = Field(..., description="Universe size")

    model_config = {"frozen": True}

    def value(self, p: Any) -> float:
        p = _rational(p)
        return math.sqrt(self.n) if p.denominator == 1 and p.numerator % self.n == 0 else 0.0


def discrete_delta_sum(b: Any, p: int, u: FiniteUniverse) -> tuple[complex, complex]:
    """Both sides of (1/sqrt n) Σ_{-n/2b <= k < n/2b} e^{πi·2bkp/n} = b^{-1}·δ^{(n)}(b p)."""
    b = _rational(b)
    if b <= 0:
        raise PreconditionError(f"Discrete delta needs b > 0, got {b}")
    half = Fraction(u.n) / (2 * b)
    if half.denominator != 1:
        raise PreconditionError(f"n/(2b) = {half} is not an integer for b={b}, n={u.n}")
    half_int = int(half)
    check_terms(2 * half_int)
    k = np.arange(-half_int, half_int, dtype=np.int64)
    # e^{πi·2bkp/n} = e^{-πi(2·(-b p)·k)/n}
    values = quadratic_phases(k, Fraction(0), -b * p, Fraction(0), u.n)
    total, _ = deterministic_sum(values)
    lhs = total / math.sqrt(u.n)
    rhs = DiscreteDelta(n=u.n).value(b * p) / float(b)
    return lhs, complex(rhs)
