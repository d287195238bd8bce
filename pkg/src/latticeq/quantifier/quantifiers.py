"""Windowed, local and global quantifiers; inner product and norm."""

import logging
import math
from fractions import Fraction
from typing import Any, Literal, Optional, Sequence, Union

import numpy as np

from latticeq.core.forms import period, single_out_variable
from latticeq.core.predicates import GaussianPredicate, PerturbedGaussianPredicate
from latticeq.core.universe import FiniteUniverse, max_local_window, window_diameter_bound
from latticeq.errors import PreconditionError
from latticeq.quantifier.results import QuantifierResult, Window
from latticeq.quantifier.summation import check_terms, deterministic_sum

logger = logging.getLogger(__name__)

WindowPolicy = Union[Window, Literal["universe"], None]


def lattice_span(m1: float, m2: float, u: FiniteUniverse) -> tuple[int, int]:
    """First and last lattice point k with m1 <= k·spacing <= m2, clipped to the universe."""
    s = u.spacing
    k_lo = math.ceil(m1 / s)
    while (k_lo - 1) * s >= m1:
        k_lo -= 1
    while k_lo * s < m1:
        k_lo += 1
    k_hi = math.floor(m2 / s)
    while (k_hi + 1) * s <= m2:
        k_hi += 1
    while k_hi * s > m2:
        k_hi -= 1
    return max(k_lo, u.lo), min(k_hi, u.hi)


def lattice_range(w: Window, u: FiniteUniverse) -> tuple[int, int]:
    return lattice_span(w.m1, w.m2, u)


def check_window(w: Window, u: FiniteUniverse) -> None:
    bound = window_diameter_bound(u)
    if w.length > bound * (1 + 1e-12):
        raise PreconditionError(
            f"Window ({w.m1}, {w.m2}) has diameter {w.length:.6g}, exceeding "
            f"sqrt(n/2π) = {bound:.6g} for n={u.n}"
        )


def _sum_range(
    pred: Any, k_lo: int, k_hi: int, u: FiniteUniverse, params: Sequence[int]
) -> tuple[complex, float, int]:
    terms = max(0, k_hi - k_lo + 1)
    check_terms(terms)
    if terms == 0:
        return 0j, 0.0, 0
    k = np.arange(k_lo, k_hi + 1, dtype=np.int64)
    value, err = deterministic_sum(pred.lattice_values(k, u, tuple(params)))
    return value, err, terms


def window_quantify(
    pred: Any, w: Window, u: FiniteUniverse, params: Sequence[int] = ()
) -> QuantifierResult:
    """E^(m1,m2): sqrt(2π/n) · sum of pred over lattice points inside the window."""
    check_window(w, u)
    k_lo, k_hi = lattice_range(w, u)
    value, err, terms = _sum_range(pred, k_lo, k_hi, u, params)
    s = u.spacing
    logger.debug("Window (%g, %g) -> k in [%d, %d]", w.m1, w.m2, k_lo, k_hi)
    return QuantifierResult.of(s * value, w, terms, s * err, (k_lo, k_hi))


def universe_quantify(
    pred: Any, u: FiniteUniverse, params: Sequence[int] = ()
) -> QuantifierResult:
    """E over the whole finite universe: sqrt(2π/n) · sum over all n points."""
    value, err, terms = _sum_range(pred, u.lo, u.hi, u, params)
    s = u.spacing
    return QuantifierResult.of(s * value, "universe", terms, s * err, (u.lo, u.hi))


def local_quantify(
    pred: Any,
    u: FiniteUniverse,
    params: Sequence[int] = (),
    mode: Literal["fixed_max", "sequence"] = "fixed_max",
) -> Union[QuantifierResult, list[QuantifierResult]]:
    """E^loc at the maximal local window, or the whole sequence m = 1..m_max."""
    m_max = max_local_window(u)
    if m_max == 0:
        raise PreconditionError(
            f"Universe n={u.n} is degenerate: no m >= 1 with 2m <= sqrt(n/2π)"
        )
    if mode == "fixed_max":
        return window_quantify(pred, Window.symmetric(m_max), u, params)
    if mode != "sequence":
        raise PreconditionError(f"Unknown local mode '{mode}'")

    # one evaluation over the widest window, nested windows are slices of it
    widest = Window.symmetric(m_max)
    check_window(widest, u)
    k_lo, k_hi = lattice_range(widest, u)
    check_terms(k_hi - k_lo + 1)
    k = np.arange(k_lo, k_hi + 1, dtype=np.int64)
    values = pred.lattice_values(k, u, tuple(params))
    s = u.spacing
    out: list[QuantifierResult] = []
    for m in range(1, m_max + 1):
        w = Window.symmetric(m)
        lo, hi = lattice_range(w, u)
        value, err = deterministic_sum(values[lo - k_lo:hi - k_lo + 1])
        out.append(QuantifierResult.of(s * value, w, hi - lo + 1, s * err, (lo, hi)))
    return out


def summation_period(pred: Any, params: Sequence[int] = ()) -> Fraction:
    """Period P fixing the global summation range (-n/2P, n/2P]."""
    if isinstance(pred, PerturbedGaussianPredicate):
        return Fraction(pred.H)
    if isinstance(pred, GaussianPredicate):
        a, b, _ = single_out_variable(pred.form, pred.var)
        return period(a, b)
    raise PreconditionError(
        f"Global quantifier needs a Gaussian or perturbed Gaussian predicate, got {type(pred).__name__}"
    )


def global_half_range(pred: Any, u: FiniteUniverse, params: Sequence[int] = ()) -> int:
    """n/(2P) as a positive integer, or PreconditionError naming the factor."""
    if isinstance(pred, PerturbedGaussianPredicate):
        return pred.check_universe(u)
    p = summation_period(pred, params)
    half = Fraction(u.n) / (2 * p)
    if half.denominator != 1 or half <= 0:
        raise PreconditionError(
            f"n/(2P) = {half} is not a positive integer for period P={p}, n={u.n}; "
            f"n must be a multiple of {(2 * p).numerator}"
        )
    return int(half)


def global_quantify(
    pred: Any, u: FiniteUniverse, params: Sequence[int] = ()
) -> QuantifierResult:
    """E^glob: (1/sqrt n) · sum over the one-period range (-n/2P, n/2P]."""
    half = global_half_range(pred, u, params)
    value, err, terms = _sum_range(pred, -half + 1, half, u, params)
    scale = 1.0 / math.sqrt(u.n)
    return QuantifierResult.of(scale * value, "global", terms, scale * err, (-half + 1, half))


def cycle_order(pred: GaussianPredicate, params: Sequence[int]) -> int:
    """Order of e^{-2πi b(p̄)/a}: the number of periods before the summand repeats."""
    a, b, _ = pred.decompose(params)
    if a == 0:
        raise PreconditionError("Full-cycle sums need a nonzero quadratic coefficient")
    return (b / a).denominator


def full_cycle_sum(
    pred: GaussianPredicate, u: FiniteUniverse, params: Sequence[int] = ()
) -> QuantifierResult:
    """(1/sqrt n) · sum over r·n/a consecutive terms, r = cycle_order.

    Shifting k by n/a multiplies the summand by e^{-2πi b(p̄)/a}, so the sum
    vanishes exactly whenever p̄ lies outside the d-dense set.
    """
    half = global_half_range(pred, u, params)
    r = cycle_order(pred, params)
    first = -half + 1
    last = -half + r * 2 * half
    value, err, terms = _sum_range(pred, first, last, u, params)
    scale = 1.0 / math.sqrt(u.n)
    return QuantifierResult.of(scale * value, "cycle", terms, scale * err, (first, last))


def _policy_range(
    psi: Any, phi: Any, u: FiniteUniverse, window_policy: WindowPolicy
) -> Optional[tuple[int, int]]:
    if isinstance(window_policy, Window):
        check_window(window_policy, u)
        return lattice_range(window_policy, u)
    if window_policy == "universe":
        return u.lo, u.hi
    if window_policy is not None:
        raise PreconditionError(f"Unknown window policy {window_policy!r}")
    supports = [s for s in (psi.support, phi.support) if s is not None]
    if not supports:
        raise PreconditionError(
            "Inner product of predicates with unbounded effective domain needs a window"
        )
    lo = max(s.lo for s in supports)
    hi = min(s.hi for s in supports)
    if lo > hi:
        return None
    return lattice_span(lo, hi, u)


def inner_product(
    psi: Any,
    phi: Any,
    u: FiniteUniverse,
    window_policy: WindowPolicy = None,
    params: Sequence[int] = (),
) -> complex:
    """⟨ψ|φ⟩ = E_x ψ(x)·conj(φ(x)); the second argument is conjugated."""
    bounds = _policy_range(psi, phi, u, window_policy)
    if bounds is None or bounds[1] < bounds[0]:
        return 0j
    k_lo, k_hi = bounds
    check_terms(k_hi - k_lo + 1)
    k = np.arange(k_lo, k_hi + 1, dtype=np.int64)
    product = psi.lattice_values(k, u, tuple(params)) * np.conj(phi.lattice_values(k, u, tuple(params)))
    value, _ = deterministic_sum(product)
    return u.spacing * value


def norm(
    psi: Any, u: FiniteUniverse, window_policy: WindowPolicy = None, params: Sequence[int] = ()
) -> float:
    """sqrt(|⟨ψ|ψ⟩|)."""
    return math.sqrt(abs(inner_product(psi, psi, u, window_policy, params)))
