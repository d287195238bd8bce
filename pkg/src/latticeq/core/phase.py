"""Exact phase exponents and their evaluation.

A phase is carried as a rational r in Q/2Z standing for e^{-πi r}. Floats only
appear when the unit complex number is finally produced, and then only for the
fractional part of a quarter turn.
"""

import math
from fractions import Fraction
from typing import Any, Union

import numpy as np
from pydantic import BaseModel, Field, model_validator

Rational = Union[int, Fraction]

# products below this bound stay exact in int64
_INT64_SAFE = 3_000_000_000


class PhaseExponent(BaseModel):
    """e^{-πi·num/den} with num/den reduced and 0 <= num/den < 2."""

    num: int = Field(..., description="Numerator, 0 <= num < 2*den")
    den: int = Field(..., description="Positive denominator, coprime to num")

    model_config = {"frozen": True}

    @model_validator(mode="before")
    @classmethod
    def _normalize(cls, data: Any) -> Any:
        if isinstance(data, dict) and "num" in data and "den" in data:
            r = Fraction(int(data["num"]), int(data["den"])) % 2
            return {"num": r.numerator, "den": r.denominator}
        return data

    @classmethod
    def of(cls, r: Rational) -> "PhaseExponent":
        r = Fraction(r)
        return cls(num=r.numerator, den=r.denominator)

    @property
    def value(self) -> Fraction:
        return Fraction(self.num, self.den)

    def __add__(self, other: "PhaseExponent") -> "PhaseExponent":
        return PhaseExponent.of(self.value + other.value)


def _quarter_turn(q: int, c: float, s: float) -> complex:
    # (-i)^q · (c - i s)
    if q == 0:
        return complex(c, -s)
    if q == 1:
        return complex(-s, -c)
    if q == 2:
        return complex(-c, s)
    return complex(s, c)


def eval_phase(p: PhaseExponent | Rational) -> complex:
    """e^{-πi r} for the reduced exponent; exact at multiples of 1/2."""
    r = p.value if isinstance(p, PhaseExponent) else Fraction(p) % 2
    twice = 2 * r
    q = math.floor(twice)
    frac = (twice - q) / 2
    if frac == 0:
        return _quarter_turn(q % 4, 1.0, 0.0)
    angle = math.pi * float(frac)
    return _quarter_turn(q % 4, math.cos(angle), math.sin(angle))


def unit_phases(numerators: np.ndarray, den: int) -> np.ndarray:
    """Vectorized e^{-πi·num/den} for integer numerators (int64 or object arrays)."""
    modulus = 2 * den
    r = numerators % modulus
    q = (2 * r) // den
    rest = 2 * r - q * den
    if rest.dtype == object:
        q = q.astype(np.int64)
        frac = np.array([Fraction(int(x), 2 * den) for x in rest], dtype=float)
    else:
        frac = rest.astype(np.float64) / (2.0 * den)
    angle = np.pi * frac
    c = np.cos(angle)
    s = np.sin(angle)
    re = np.select([q == 0, q == 1, q == 2], [c, -s, -c], default=s)
    im = np.select([q == 0, q == 1, q == 2], [-s, -c, s], default=c)
    return re + 1j * im


def polynomial_numerators(
    k: np.ndarray, coefficients: tuple[int, ...], modulus: int
) -> np.ndarray:
    """sum_j c_j k^j reduced mod ``modulus``, exactly.

    Pass modulus = 2·den when the result feeds ``unit_phases(…, den)``.

    ``coefficients`` lists c_0, c_1, ... as Python integers. int64 arithmetic
    is used while every intermediate product provably fits, otherwise the
    computation falls back to Python integers in an object array.
    """
    kmax = int(np.max(np.abs(k))) if k.size else 0
    if modulus < _INT64_SAFE and kmax < _INT64_SAFE:
        kk = k.astype(np.int64) % modulus
        coeffs = [c % modulus for c in coefficients]
    else:
        kk = np.array([int(x) % modulus for x in k], dtype=object)
        coeffs = [c % modulus for c in coefficients]
    total = np.zeros_like(kk)
    power = np.ones_like(kk)
    for j, c in enumerate(coeffs):
        if j:
            power = (power * kk) % modulus
        if c:
            total = (total + power * c) % modulus
    return total
