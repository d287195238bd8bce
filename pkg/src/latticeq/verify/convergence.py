"""Finite-to-continuum convergence sweeps.

A quantity is a windowed integral of a Lipschitz test function. Each universe
size in the sweep yields the finite quantifier value, the continuum integral
over the nominal window and over the lattice-realized window [k_lo·s, k_hi·s],
and the Riemann bound. The decay exponent α is fitted on the realized-window
errors; domination is checked on the nominal errors.
"""

import asyncio
import logging
import math
from typing import Callable, Iterable, Optional

import numpy as np
from pydantic import BaseModel, Field
from scipy import integrate

from latticeq.core.predicates import SampledPredicate
from latticeq.core.universe import FiniteUniverse, Interval, make_universe
from latticeq.errors import PreconditionError
from latticeq.quantifier.quantifiers import inner_product, lattice_range, window_quantify
from latticeq.quantifier.results import Window
from latticeq.schemas.report import ConvergenceReport, ConvergenceRow
from latticeq.verify.bounds import riemann_error_bound

logger = logging.getLogger(__name__)

Oracle = Callable[[float, float], float]

DEFAULT_SWEEP = (10_000, 40_000, 160_000, 640_000, 2_560_000)


def _gaussian(x: np.ndarray) -> np.ndarray:
    return np.exp(-x * x)


def _normalized_gaussian(x: np.ndarray) -> np.ndarray:
    return np.exp(-x * x / 2) / math.pi**0.25


def _constant(x: np.ndarray) -> np.ndarray:
    return np.ones_like(x)


class Quantity(BaseModel):
    """A named windowed integral E^(m1,m2) of a sampled test function."""

    name: str = Field(..., description="Quantity id")
    description: str = Field(default="")
    window: Window
    predicate: SampledPredicate = Field(..., description="Integrand with lipschitz/sup bounds")
    norm_of: Optional[SampledPredicate] = Field(
        default=None, description="When set the finite value is ⟨ψ|ψ⟩ of this state"
    )

    model_config = {"arbitrary_types_allowed": True}

    def finite(self, u: FiniteUniverse) -> tuple[float, tuple[int, int]]:
        k_range = lattice_range(self.window, u)
        if self.norm_of is not None:
            value = inner_product(self.norm_of, self.norm_of, u, self.window)
            return value.real, k_range
        result = window_quantify(self.predicate, self.window, u)
        return result.complex_value.real, k_range

    def integral(self, lo: float, hi: float) -> float:
        fn = self.predicate.fn
        value, _ = integrate.quad(
            lambda t: float(np.real(fn(np.float64(t)))), lo, hi, epsabs=1e-14, epsrel=1e-13, limit=200
        )
        return value


QUANTITIES: dict[str, Quantity] = {
    "gaussian-window": Quantity(
        name="gaussian-window",
        description="E^(-4,4) of e^{-x²}",
        window=Window(m1=-4.0, m2=4.0),
        predicate=SampledPredicate(
            fn=_gaussian, lipschitz=math.sqrt(2 / math.e), sup=1.0, name="exp(-x^2)"
        ),
    ),
    "gaussian-norm": Quantity(
        name="gaussian-norm",
        description="⟨ψ|ψ⟩ over (-2,2) for ψ = e^{-x²/2}/π^{1/4}",
        window=Window(m1=-2.0, m2=2.0),
        predicate=SampledPredicate(
            fn=lambda x: _normalized_gaussian(x) ** 2,
            lipschitz=math.sqrt(2 / math.e) / math.sqrt(math.pi),
            sup=1 / math.sqrt(math.pi),
            name="|psi|^2",
        ),
        norm_of=SampledPredicate(fn=_normalized_gaussian, name="psi"),
    ),
    "constant-window": Quantity(
        name="constant-window",
        description="E^(-1,1) of 1",
        window=Window(m1=-1.0, m2=1.0),
        predicate=SampledPredicate(
            fn=_constant, domain=Interval(lo=-1.0, hi=1.0), lipschitz=0.0, sup=1.0, name="1"
        ),
    ),
}


def quantity_by_name(name: str) -> Quantity:
    try:
        return QUANTITIES[name]
    except KeyError:
        raise PreconditionError(
            f"Unknown quantity '{name}'; choose one of {', '.join(sorted(QUANTITIES))}"
        ) from None


def fit_decay_exponent(ns: Iterable[int], errors: Iterable[float]) -> Optional[float]:
    """α in error ≈ C·n^-α by least squares in log-log; None with fewer than two usable rows."""
    pairs = [(n, e) for n, e in zip(ns, errors) if e > 0 and math.isfinite(e)]
    if len(pairs) < 2:
        return None
    log_n = np.log([float(n) for n, _ in pairs])
    log_e = np.log([e for _, e in pairs])
    slope, _ = np.polyfit(log_n, log_e, 1)
    return float(-slope)


def convergence_row(
    quantity: Quantity, n: int, h_n: int = 1, oracle: Optional[Oracle] = None
) -> ConvergenceRow:
    u = make_universe(n, h_n)
    reference_of = oracle or quantity.integral
    value, (k_lo, k_hi) = quantity.finite(u)
    s = u.spacing
    reference = reference_of(quantity.window.m1, quantity.window.m2)
    realized = reference_of(k_lo * s, k_hi * s)
    lipschitz = quantity.predicate.lipschitz
    if lipschitz is None:
        raise PreconditionError(f"Quantity '{quantity.name}' declares no Lipschitz bound M_f")
    edge = s * quantity.predicate.sup if quantity.predicate.sup is not None else 0.0
    logger.debug("Sweep %s: n=%d k=[%d, %d] value=%.17g", quantity.name, n, k_lo, k_hi, value)
    return ConvergenceRow(
        n=n,
        value=value,
        reference=reference,
        realized_reference=realized,
        error=abs(value - reference),
        realized_error=abs(value - realized),
        bound=riemann_error_bound(lipschitz, quantity.window, u) + edge,
        k_range=(k_lo, k_hi),
    )


def _sorted_sizes(n_values: Iterable[int]) -> list[int]:
    ns = [int(n) for n in n_values]
    if len(set(ns)) != len(ns):
        raise PreconditionError(f"Sweep sizes must be distinct, got {ns}")
    return sorted(ns)


async def convergence_sweep_async(
    quantity: Quantity | str,
    n_values: Iterable[int] = DEFAULT_SWEEP,
    oracle: Optional[Oracle] = None,
    h_n: int = 1,
) -> ConvergenceReport:
    """Evaluate every n concurrently; rows come back in increasing n."""
    q = quantity_by_name(quantity) if isinstance(quantity, str) else quantity
    ns = _sorted_sizes(n_values)
    rows = await asyncio.gather(
        *(asyncio.to_thread(convergence_row, q, n, h_n, oracle) for n in ns)
    )
    alpha = fit_decay_exponent((r.n for r in rows), (r.realized_error for r in rows))
    logger.info("Sweep %s over %d sizes: alpha=%s", q.name, len(rows), alpha)
    return ConvergenceReport(
        quantity=q.name,
        window=(q.window.m1, q.window.m2),
        rows=list(rows),
        alpha=alpha,
    )


def convergence_sweep(
    quantity: Quantity | str,
    n_values: Iterable[int] = DEFAULT_SWEEP,
    oracle: Optional[Oracle] = None,
    h_n: int = 1,
) -> ConvergenceReport:
    """Synchronous form of convergence_sweep_async, for callers outside an event loop."""
    return asyncio.run(convergence_sweep_async(quantity, n_values, oracle, h_n))
