"""Numerical evaluation of expression trees, and expressions as predicates."""

from typing import Any, Mapping, Optional, Sequence

import numpy as np
from pydantic import BaseModel

from latticeq.core.universe import FiniteUniverse, Interval
from latticeq.dsl.ast import BinOp, Call, Expr, Neg, Num, Pow, Sym, Var, parameter_count
from latticeq.errors import PreconditionError


def evaluate(e: Expr, env: Mapping[str, Any]) -> Any:
    """Evaluate with numpy broadcasting; ``env`` supplies n and the variables."""
    if isinstance(e, Num):
        return float(e.value)
    if isinstance(e, Sym):
        if e.name == "pi":
            return np.pi
        if e.name == "i":
            return 1j
        return _lookup(env, "n")
    if isinstance(e, Var):
        return _lookup(env, e.name)
    if isinstance(e, Neg):
        return -evaluate(e.operand, env)
    if isinstance(e, Pow):
        base = evaluate(e.base, env)
        if e.exponent < 0:
            base = np.asarray(base, dtype=np.complex128)
        return base**e.exponent
    if isinstance(e, Call):
        return np.exp(evaluate(e.arg, env))
    left = evaluate(e.left, env)
    right = evaluate(e.right, env)
    if e.op == "+":
        return left + right
    if e.op == "-":
        return left - right
    if e.op == "*":
        return left * right
    return left / right


def _lookup(env: Mapping[str, Any], name: str) -> Any:
    try:
        return env[name]
    except KeyError:
        raise PreconditionError(f"No value supplied for '{name}'") from None


class ExprPredicate(BaseModel):
    """A parsed expression evaluated at lattice points.

    k is the lattice integer, x = k·spacing its embedded coordinate and p_j
    the lattice parameters.
    """

    expr: Any
    domain: Optional[Interval] = None
    name: str = "expr"

    model_config = {"frozen": True, "arbitrary_types_allowed": True}

    @property
    def support(self) -> Optional[Interval]:
        return self.domain

    @property
    def parameter_count(self) -> int:
        return parameter_count(self.expr)

    def environment(
        self, k: np.ndarray, u: FiniteUniverse, params: Sequence[int]
    ) -> dict[str, Any]:
        if len(params) != self.parameter_count:
            raise PreconditionError(
                f"Expression needs {self.parameter_count} parameters, got {len(params)}"
            )
        kk = np.asarray(k, dtype=np.float64)
        env: dict[str, Any] = {"k": kk, "x": kk * u.spacing, "n": float(u.n)}
        for j, p in enumerate(params, start=1):
            env[f"p{j}"] = float(p)
        return env

    def lattice_values(
        self, k: np.ndarray, u: FiniteUniverse, params: Sequence[int] = ()
    ) -> np.ndarray:
        k = np.asarray(k)
        env = self.environment(k, u, params)
        values = np.asarray(evaluate(self.expr, env), dtype=np.complex128)
        values = np.broadcast_to(values, k.shape).copy()
        if self.domain is not None:
            x = env["x"]
            values[(x < self.domain.lo) | (x > self.domain.hi)] = 0.0
        return values
