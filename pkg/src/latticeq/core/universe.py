"""Finite lattice universes, the continuum reference and bounded intervals."""

import logging
import math
from fractions import Fraction
from functools import reduce

import numpy as np
from pydantic import BaseModel, Field, model_validator

from latticeq.errors import PreconditionError

logger = logging.getLogger(__name__)


class FiniteUniverse(BaseModel):
    """The lattice Z ∩ [-n/2, n/2) with spacing sqrt(2π/n) and Planck integer h_n.

    Only n and h_n are stored; spacing and the phase unit ν = 2π/n are derived.
    """

    n: int = Field(..., description="Universe size (positive, even)")
    h_n: int = Field(default=1, description="Discrete Planck constant, coprime to n")

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def _check(self) -> "FiniteUniverse":
        _validate_universe(self.n, self.h_n)
        return self

    @property
    def spacing(self) -> float:
        return math.sqrt(2.0 * math.pi / self.n)

    @property
    def nu(self) -> Fraction:
        """ν in units of π: ν = π · (2/n)."""
        return Fraction(2, self.n)

    @property
    def lo(self) -> int:
        return -self.n // 2

    @property
    def hi(self) -> int:
        """Largest lattice point, n/2 - 1."""
        return self.n // 2 - 1

    def contains(self, k: int) -> bool:
        return self.lo <= k <= self.hi

    def points(self) -> np.ndarray:
        """All lattice points in ascending order."""
        return np.arange(self.lo, self.hi + 1, dtype=np.int64)

    def wrap(self, k: int) -> int:
        """Map an integer back into [-n/2, n/2) modulo n."""
        return (k - self.lo) % self.n + self.lo


class ContinuumRef(BaseModel):
    """The continuum universe U(∞) = R with a positive reduced Planck constant."""

    hbar: float = Field(default=1.0, description="Reduced Planck constant")

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def _check(self) -> "ContinuumRef":
        if not self.hbar > 0:
            raise ValueError(f"hbar must be positive, got {self.hbar}")
        return self


class Interval(BaseModel):
    """A closed bounded interval [lo, hi] of embedded coordinates."""

    lo: float
    hi: float

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def _check(self) -> "Interval":
        if not self.lo < self.hi:
            raise ValueError(f"Interval requires lo < hi, got [{self.lo}, {self.hi}]")
        return self

    @property
    def diameter(self) -> float:
        return self.hi - self.lo

    def contains(self, x: float) -> bool:
        return self.lo <= x <= self.hi


def _validate_universe(n: int, h_n: int) -> None:
    if n <= 0 or n % 2:
        raise PreconditionError(f"Universe size n must be a positive even integer, got {n}")
    if h_n < 1:
        raise PreconditionError(f"h_n must be a positive integer, got {h_n}")
    if math.gcd(h_n, n) != 1:
        raise PreconditionError(
            f"gcd(h_n, n) = {math.gcd(h_n, n)} for h_n={h_n}, n={n}; the momentum "
            "basis v[p] is orthonormal only when h_n and n are coprime"
        )


def make_universe(n: int, h_n: int = 1) -> FiniteUniverse:
    """Build a finite universe, raising PreconditionError on invalid (n, h_n)."""
    _validate_universe(n, h_n)
    return FiniteUniverse(n=n, h_n=h_n)


def embed_point(u: FiniteUniverse, k: int) -> float:
    """Embedded coordinate k·sqrt(2π/n) of a lattice point."""
    if not u.contains(k):
        raise PreconditionError(
            f"Lattice point {k} outside universe range [{u.lo}, {u.hi}] for n={u.n}"
        )
    return k * u.spacing


def lattice_distance(u: FiniteUniverse, k1: int, k2: int) -> float:
    """Cyclic distance spacing · min(|k1-k2|, n-|k1-k2|)."""
    for k in (k1, k2):
        if not u.contains(k):
            raise PreconditionError(
                f"Lattice point {k} outside universe range [{u.lo}, {u.hi}] for n={u.n}"
            )
    d = abs(k1 - k2)
    return u.spacing * min(d, u.n - d)


def max_local_window(u: FiniteUniverse) -> int:
    """Largest m with 2m <= sqrt(n/2π); 0 marks a degenerate universe."""
    bound = math.sqrt(u.n / (2.0 * math.pi))
    m = int(bound // 2)
    while 2 * (m + 1) <= bound:
        m += 1
    while m > 0 and 2 * m > bound:
        m -= 1
    if m == 0:
        logger.warning("Universe n=%d admits no local window (degenerate)", u.n)
    return m


def window_diameter_bound(u: FiniteUniverse) -> float:
    """Largest admissible window diameter sqrt(n/2π) in embedded units."""
    return math.sqrt(u.n / (2.0 * math.pi))


def highly_divisible(bound: int, scale: int = 1) -> int:
    """lcm(1..bound)·scale, a universe size divisible by every integer <= bound."""
    if bound < 1 or scale < 1:
        raise PreconditionError(f"highly_divisible needs bound, scale >= 1, got {bound}, {scale}")
    return reduce(math.lcm, range(1, bound + 1), 1) * scale


def divisibility_bound(n: int) -> int:
    """Largest B with lcm(1..B) dividing n."""
    b, acc = 0, 1
    while n % math.lcm(acc, b + 1) == 0:
        b += 1
        acc = math.lcm(acc, b)
        if b > 64:
            break
    return b
