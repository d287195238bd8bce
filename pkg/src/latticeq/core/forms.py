"""Rational quadratic and linear forms, periods and d-dense domains."""

import itertools
import math
from fractions import Fraction
from functools import reduce
from typing import Any, Iterator, Optional, Sequence

from pydantic import BaseModel, Field, model_validator

from latticeq.errors import PreconditionError


def _as_fraction(value: Any) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (list, tuple)) and len(value) == 2:
        return Fraction(int(value[0]), int(value[1]))
    if isinstance(value, float):
        return Fraction(value).limit_denominator(10**12)
    return Fraction(value)


def default_variables(m: int) -> tuple[str, ...]:
    if m <= 0:
        return ()
    return ("k",) + tuple(f"p{j}" for j in range(1, m))


class LinearForm(BaseModel):
    """b(ȳ) = sum_j coeffs[j]·y_j with rational coefficients."""

    coeffs: tuple[Fraction, ...] = Field(default=(), description="Rational coefficients")
    variables: tuple[str, ...] = Field(default=(), description="Variable names")

    model_config = {"frozen": True, "arbitrary_types_allowed": True}

    @model_validator(mode="before")
    @classmethod
    def _coerce(cls, data: Any) -> Any:
        if isinstance(data, dict):
            coeffs = tuple(_as_fraction(c) for c in data.get("coeffs", ()))
            names = tuple(data.get("variables") or (f"p{j + 1}" for j in range(len(coeffs))))
            return {"coeffs": coeffs, "variables": names}
        return data

    @classmethod
    def of(cls, *coeffs: Any) -> "LinearForm":
        return cls(coeffs=coeffs)

    @property
    def arity(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def evaluate(self, point: Sequence[int]) -> Fraction:
        if len(point) != self.arity:
            raise PreconditionError(
                f"Linear form of arity {self.arity} evaluated at {len(point)} values"
            )
        return sum((c * p for c, p in zip(self.coeffs, point)), Fraction(0))

    def content(self) -> tuple[Fraction, tuple[int, ...]]:
        """Split into b·(L_1 y_1 + ...) with coprime integers L_j and b > 0."""
        if self.is_zero():
            return Fraction(0), tuple(0 for _ in self.coeffs)
        common = reduce(math.lcm, (c.denominator for c in self.coeffs), 1)
        ints = [int(c * common) for c in self.coeffs]
        g = reduce(math.gcd, (abs(x) for x in ints), 0)
        return Fraction(g, common), tuple(x // g for x in ints)


class QuadraticForm(BaseModel):
    """Q(x̄) = x̄ᵀ·coeffs·x̄ with a symmetric rational matrix.

    Diagonal entries are the squared-term coefficients, off-diagonal entries
    hold half the cross-term coefficients.
    """

    m: int = Field(..., description="Arity")
    coeffs: tuple[tuple[Fraction, ...], ...] = Field(..., description="Symmetric m×m matrix")
    positive_definite: bool = Field(default=False, description="Verified positive-definite flag")
    variables: tuple[str, ...] = Field(default=(), description="Variable names")

    model_config = {"frozen": True, "arbitrary_types_allowed": True}

    @model_validator(mode="before")
    @classmethod
    def _coerce(cls, data: Any) -> Any:
        if isinstance(data, dict) and "coeffs" in data:
            rows = tuple(tuple(_as_fraction(c) for c in row) for row in data["coeffs"])
            m = int(data.get("m", data.get("arity", len(rows))))
            given = data.get("variables")
            names = tuple(given) if given is not None else default_variables(m)
            return {
                "m": m,
                "coeffs": rows,
                "positive_definite": bool(data.get("positive_definite", False)),
                "variables": names,
            }
        return data

    @model_validator(mode="after")
    def _check(self) -> "QuadraticForm":
        if len(self.coeffs) != self.m or any(len(row) != self.m for row in self.coeffs):
            raise ValueError(f"Quadratic form of arity {self.m} needs an {self.m}x{self.m} matrix")
        if len(self.variables) != self.m:
            raise ValueError(f"Quadratic form of arity {self.m} needs {self.m} variable names")
        for i in range(self.m):
            for j in range(i):
                if self.coeffs[i][j] != self.coeffs[j][i]:
                    raise ValueError(f"Quadratic form matrix not symmetric at ({i}, {j})")
        if self.positive_definite and not all(
            minor > 0 for minor in leading_principal_minors(self.coeffs)
        ):
            raise ValueError("Quadratic form flagged positive-definite has a non-positive leading minor")
        return self

    @classmethod
    def from_terms(
        cls,
        m: int,
        terms: dict[tuple[int, int], Any],
        variables: Optional[Sequence[str]] = None,
        positive_definite: bool = False,
    ) -> "QuadraticForm":
        """Build from monomial coefficients: {(i, j): c} means c·x_i·x_j."""
        matrix = [[Fraction(0)] * m for _ in range(m)]
        for (i, j), c in terms.items():
            c = _as_fraction(c)
            if i == j:
                matrix[i][i] += c
            else:
                matrix[i][j] += c / 2
                matrix[j][i] += c / 2
        return cls(
            m=m,
            coeffs=tuple(tuple(row) for row in matrix),
            positive_definite=positive_definite,
            variables=tuple(variables) if variables is not None else default_variables(m),
        )

    @classmethod
    def diagonal(cls, *entries: Any) -> "QuadraticForm":
        return cls.from_terms(len(entries), {(i, i): c for i, c in enumerate(entries)})

    def evaluate(self, point: Sequence[int]) -> Fraction:
        if len(point) != self.m:
            raise PreconditionError(
                f"Quadratic form of arity {self.m} evaluated at {len(point)} values"
            )
        total = Fraction(0)
        for i in range(self.m):
            for j in range(self.m):
                if self.coeffs[i][j]:
                    total += self.coeffs[i][j] * point[i] * point[j]
        return total

    def terms(self) -> dict[tuple[int, int], Fraction]:
        """Monomial coefficients with i <= j."""
        out: dict[tuple[int, int], Fraction] = {}
        for i in range(self.m):
            if self.coeffs[i][i]:
                out[(i, i)] = self.coeffs[i][i]
            for j in range(i + 1, self.m):
                if self.coeffs[i][j]:
                    out[(i, j)] = 2 * self.coeffs[i][j]
        return out

    def is_positive_definite(self) -> bool:
        return all(minor > 0 for minor in leading_principal_minors(self.coeffs))

    def to_json(self) -> dict[str, Any]:
        return {
            "arity": self.m,
            "coeffs": [[c.numerator, c.denominator] for row in self.coeffs for c in row],
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "QuadraticForm":
        m = int(data["arity"])
        flat = [_as_fraction(c) for c in data["coeffs"]]
        if len(flat) != m * m:
            raise ValueError(f"Expected {m * m} coefficients for arity {m}, got {len(flat)}")
        return cls(m=m, coeffs=tuple(tuple(flat[i * m:(i + 1) * m]) for i in range(m)))


def leading_principal_minors(matrix: Sequence[Sequence[Fraction]]) -> list[Fraction]:
    """Exact leading principal minors via fraction Gaussian elimination."""
    m = len(matrix)
    a = [list(row) for row in matrix]
    minors: list[Fraction] = []
    det = Fraction(1)
    for col in range(m):
        pivot = a[col][col]
        if pivot == 0:
            # a zero pivot without row exchange means this and later minors need
            # direct evaluation
            minors.extend(_det([row[: s + 1] for row in matrix[: s + 1]]) for s in range(col, m))
            return minors
        det *= pivot
        minors.append(det)
        for row in range(col + 1, m):
            factor = a[row][col] / pivot
            if factor:
                for c in range(col, m):
                    a[row][c] -= factor * a[col][c]
    return minors


def _det(matrix: Sequence[Sequence[Fraction]]) -> Fraction:
    a = [list(row) for row in matrix]
    m = len(a)
    det = Fraction(1)
    for col in range(m):
        pivot_row = next((r for r in range(col, m) if a[r][col] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != col:
            a[col], a[pivot_row] = a[pivot_row], a[col]
            det = -det
        pivot = a[col][col]
        det *= pivot
        for r in range(col + 1, m):
            factor = a[r][col] / pivot
            for c in range(col, m):
                a[r][c] -= factor * a[col][c]
    return det


def single_out_variable(q: QuadraticForm, i: int) -> tuple[Fraction, LinearForm, QuadraticForm]:
    """Write Q = a·x_i² + 2·x_i·b(ȳ) + c(ȳ), ȳ the remaining variables in order."""
    if not 0 <= i < q.m:
        raise PreconditionError(f"Variable index {i} out of range for arity {q.m}")
    rest = [j for j in range(q.m) if j != i]
    a = q.coeffs[i][i]
    b = LinearForm(
        coeffs=tuple(q.coeffs[i][j] for j in rest),
        variables=tuple(q.variables[j] for j in rest),
    )
    c = QuadraticForm(
        m=len(rest),
        coeffs=tuple(tuple(q.coeffs[r][s] for s in rest) for r in rest),
        variables=tuple(q.variables[j] for j in rest),
    )
    return a, b, c


def period(a: Any, b: Optional[LinearForm] = None) -> Fraction:
    """a if a ≠ 0, else the content of b, else 1 for constants."""
    a = _as_fraction(a)
    if a != 0:
        return a
    if b is not None and not b.is_zero():
        return b.content()[0]
    return Fraction(1)


def dense_modulus(a: Any, b: LinearForm) -> tuple[int, int]:
    """(A, D) with a = A/D and D clearing the denominators of a and b."""
    a = _as_fraction(a)
    if a == 0:
        raise PreconditionError("The d-dense domain is undefined for a = 0")
    d = reduce(math.lcm, (c.denominator for c in b.coeffs), a.denominator)
    return int(a * d), d


def dense_domain_membership(point: Sequence[int], a: Any, b: LinearForm) -> bool:
    """True iff A divides D·b(p̄), i.e. b(p̄)/a is an integer."""
    big_a, d = dense_modulus(a, b)
    value = d * b.evaluate(point)
    if value.denominator != 1:
        raise PreconditionError(f"D={d} does not clear the denominators of b at {tuple(point)}")
    return value.numerator % abs(big_a) == 0


def _box_points(arity: int) -> Iterator[tuple[int, ...]]:
    """Lattice tuples ordered by max-norm, then lexicographically."""
    if arity == 0:
        yield ()
        return
    radius = 0
    while True:
        shell = [
            p
            for p in itertools.product(range(-radius, radius + 1), repeat=arity)
            if max((abs(x) for x in p), default=0) == radius
        ]
        yield from sorted(shell, key=lambda p: (sum(abs(x) for x in p), p))
        radius += 1


def sample_dense_points(
    a: Any, b: LinearForm, count: int, member: bool = True, nonnegative: bool = False
) -> list[tuple[int, ...]]:
    """First ``count`` points (by distance from the origin) inside or outside X_a."""
    out: list[tuple[int, ...]] = []
    big_a, _ = dense_modulus(a, b)
    if not member and abs(big_a) == 1:
        return out
    for point in _box_points(b.arity):
        if nonnegative and any(x < 0 for x in point):
            continue
        if dense_domain_membership(point, a, b) == member:
            out.append(point)
            if len(out) >= count:
                return out
        if max((abs(x) for x in point), default=0) > 10**4:
            break
    return out


def nearest_dense_point(point: Sequence[int], a: Any, b: LinearForm) -> tuple[int, ...]:
    """A member of X_a closest (max-norm) to ``point``; X_a has finite index."""
    big_a, _ = dense_modulus(a, b)
    for offset in _box_points(b.arity):
        candidate = tuple(p + o for p, o in zip(point, offset))
        if dense_domain_membership(candidate, a, b):
            return candidate
        if max((abs(x) for x in offset), default=0) > abs(big_a):
            break
    raise PreconditionError(f"No d-dense point near {tuple(point)} for a={a}")
