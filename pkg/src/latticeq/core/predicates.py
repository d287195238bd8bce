"""Gaussian, perturbed-Gaussian and sampled predicates.

Every predicate exposes ``lattice_values(k, u, params)``: its values at an
array of lattice points k of the summation variable, the remaining variables
fixed to the lattice tuple ``params``. Quantifiers only rely on that method
and on ``support`` (a bounded embedded interval, or None when unbounded).
"""

import math
from fractions import Fraction
from functools import reduce
from typing import Any, Callable, Optional, Protocol, Sequence, runtime_checkable

import numpy as np
from pydantic import BaseModel, Field, field_validator

from latticeq.core.forms import QuadraticForm, single_out_variable
from latticeq.core.phase import eval_phase, polynomial_numerators, unit_phases
from latticeq.core.universe import FiniteUniverse, Interval
from latticeq.errors import PreconditionError


@runtime_checkable
class Predicate(Protocol):
    @property
    def support(self) -> Optional[Interval]: ...

    def lattice_values(
        self, k: np.ndarray, u: FiniteUniverse, params: Sequence[int] = ()
    ) -> np.ndarray: ...


class GaussianPredicate(BaseModel):
    """η·e^{-πi Q(k̄)/n} on lattices, η·e^{-i Q(x̄)/2} on the continuum."""

    eta: complex = Field(default=1.0 + 0j, description="Complex amplitude")
    form: QuadraticForm = Field(..., description="Rational quadratic form")
    var: int = Field(default=0, description="Index of the summation variable")

    model_config = {"frozen": True, "arbitrary_types_allowed": True}

    @field_validator("eta", mode="before")
    @classmethod
    def _complex_eta(cls, value: Any) -> complex:
        return complex(value)

    @property
    def arity(self) -> int:
        return self.form.m

    @property
    def support(self) -> Optional[Interval]:
        return None

    def decompose(self, params: Sequence[int]) -> tuple[Fraction, Fraction, Fraction]:
        """(a, b(p̄), c(p̄)) with Q = a·k² + 2k·b(p̄) + c(p̄) at the given parameters."""
        if len(params) != self.form.m - 1:
            raise PreconditionError(
                f"Predicate of arity {self.form.m} needs {self.form.m - 1} parameters, "
                f"got {len(params)}"
            )
        a, b, c = single_out_variable(self.form, self.var)
        return a, b.evaluate(params), c.evaluate(params)

    def lattice_values(
        self, k: np.ndarray, u: FiniteUniverse, params: Sequence[int] = ()
    ) -> np.ndarray:
        a, b, c = self.decompose(params)
        return self.eta * quadratic_phases(k, a, b, c, u.n)

    def continuum_value(self, point: Sequence[float]) -> complex:
        x = np.asarray(point, dtype=float)
        mat = np.array([[float(c) for c in row] for row in self.form.coeffs])
        q = float(x @ mat @ x)
        return self.eta * complex(np.exp(-0.5j * q))


def quadratic_phases(
    k: np.ndarray, a: Fraction, b: Fraction, c: Fraction, n: int
) -> np.ndarray:
    """e^{-πi(a k² + 2 b k + c)/n} for integer k, exact up to the final rounding."""
    d = reduce(math.lcm, (a.denominator, (2 * b).denominator, c.denominator), 1)
    coeffs = (int(c * d), int(2 * b * d), int(a * d))
    return unit_phases(polynomial_numerators(k, coeffs, 2 * d * n), d * n)


def eval_gaussian(pred: GaussianPredicate, point: Sequence[int], u: FiniteUniverse) -> complex:
    """η·e^{-πi Q(k̄)/n} from the exact rational Q(k̄)/n."""
    if len(point) != pred.form.m:
        raise PreconditionError(
            f"Predicate of arity {pred.form.m} evaluated at {len(point)} values"
        )
    return pred.eta * eval_phase(pred.form.evaluate(point) / u.n)


class PerturbedGaussianPredicate(BaseModel):
    """e^{-πi H (k² + k⁴/L)/n}; L = None is the unperturbed limit λ = 0."""

    H: int = Field(..., description="Inverse Planck scale, h = 1/(2πH)")
    L: Optional[int] = Field(default=None, description="Quartic scale, λ = n/L")

    model_config = {"frozen": True}

    @property
    def support(self) -> Optional[Interval]:
        return None

    @property
    def h(self) -> float:
        return 1.0 / (2.0 * math.pi * self.H)

    def lam(self, u: FiniteUniverse) -> float:
        return 0.0 if self.L is None else u.n / self.L

    def lambda_h(self, u: FiniteUniverse) -> float:
        return self.lam(u) * self.h

    def check_universe(self, u: FiniteUniverse) -> int:
        """Validate H | n with n/(2H) > 1 integral; returns n/(2H)."""
        if self.H < 1 or (self.L is not None and self.L < 1):
            raise PreconditionError(f"H and L must be positive integers, got H={self.H}, L={self.L}")
        if u.n % (2 * self.H):
            raise PreconditionError(
                f"n/(2H) must be an integer: n={u.n} is not divisible by 2H={2 * self.H}"
            )
        half = u.n // (2 * self.H)
        if half <= 1:
            raise PreconditionError(f"n/(2H) = {half} must exceed 1")
        return half

    def numerator_coefficients(self) -> tuple[tuple[int, ...], int]:
        """Integer polynomial coefficients and the denominator multiplying n."""
        if self.L is None:
            return (0, 0, self.H), 1
        return (0, 0, self.H * self.L, 0, self.H), self.L

    def lattice_values(
        self, k: np.ndarray, u: FiniteUniverse, params: Sequence[int] = ()
    ) -> np.ndarray:
        if params:
            raise PreconditionError("Perturbed Gaussian predicates take no parameters")
        coeffs, den = self.numerator_coefficients()
        return unit_phases(polynomial_numerators(k, coeffs, 2 * den * u.n), den * u.n)


class SampledPredicate(BaseModel):
    """A test function sampled at embedded coordinates, zero outside its domain.

    ``fn`` receives the embedded coordinate array x followed by the embedded
    parameter values. ``lipschitz`` (M_f) and ``sup`` feed the Riemann bounds.
    """

    fn: Callable[..., Any]
    domain: Optional[Interval] = None
    lipschitz: Optional[float] = None
    sup: Optional[float] = None
    name: str = "sampled"

    model_config = {"frozen": True, "arbitrary_types_allowed": True}

    @property
    def support(self) -> Optional[Interval]:
        return self.domain

    def lattice_values(
        self, k: np.ndarray, u: FiniteUniverse, params: Sequence[int] = ()
    ) -> np.ndarray:
        x = np.asarray(k, dtype=np.float64) * u.spacing
        embedded = [p * u.spacing for p in params]
        values = np.asarray(self.fn(x, *embedded), dtype=np.complex128)
        values = np.broadcast_to(values, x.shape).copy()
        if self.domain is not None:
            values[(x < self.domain.lo) | (x > self.domain.hi)] = 0.0
        return values

    def scaled(self, factor: complex) -> "SampledPredicate":
        fn = self.fn
        return self.model_copy(update={"fn": lambda x, *p: factor * fn(x, *p)})


class SumPredicate(BaseModel):
    """Pointwise linear combination of predicates sharing one universe."""

    terms: tuple[tuple[Any, Any], ...]

    model_config = {"frozen": True, "arbitrary_types_allowed": True}

    @property
    def support(self) -> Optional[Interval]:
        supports = [p.support for _, p in self.terms]
        if any(s is None for s in supports):
            return None
        return Interval(lo=min(s.lo for s in supports), hi=max(s.hi for s in supports))  # type: ignore[union-attr]

    def lattice_values(
        self, k: np.ndarray, u: FiniteUniverse, params: Sequence[int] = ()
    ) -> np.ndarray:
        total = np.zeros(k.shape, dtype=np.complex128)
        for coeff, pred in self.terms:
            total = total + coeff * pred.lattice_values(k, u, params)
        return total
