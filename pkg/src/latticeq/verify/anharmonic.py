"""Perturbed Gaussian (lattice anharmonic oscillator) checks.

The state e^{-πiH(k² + k⁴/L)/n} is summed over one period (-n/2H, n/2H]
and split as E^glob = sqrt(h)·(T0 + T_φ) with T0 the pure Gaussian part.
With M = n/(2H) the perturbation strength is λh = M/(πL).
"""

import math
from fractions import Fraction
from typing import Any, Iterable, Optional, Sequence

import numpy as np

from latticeq import sign_ledger
from latticeq.config import Tolerances
from latticeq.core.phase import eval_phase
from latticeq.core.predicates import PerturbedGaussianPredicate
from latticeq.core.universe import make_universe
from latticeq.errors import PreconditionError
from latticeq.quantifier.closed_forms import gauss_closed_form_discrete
from latticeq.quantifier.summation import check_terms, deterministic_sum
from latticeq.schemas.report import AnharmonicReport, VerificationReport, complex_pair

DEFAULT_PERIOD_MULTIPLE = 2
DEFAULT_LAMBDA_H = (0.005, 0.01, 0.02)
DEFAULT_H_GRID = (10_000, 20_000, 40_000)


def auto_L(period_multiple: int, lambda_h: float) -> int:
    """L with M/(πL) closest to the requested λh."""
    if lambda_h <= 0:
        raise PreconditionError(f"lambda_h must be positive, got {lambda_h}")
    return max(1, round(period_multiple / (math.pi * lambda_h)))


def anharmonic_check(
    H: int,
    L: Optional[int],
    n: int,
    lambda_h_max: float = 0.05,
) -> AnharmonicReport:
    pred = PerturbedGaussianPredicate(H=H, L=L)
    u = make_universe(n)
    half = pred.check_universe(u)
    lambda_h = pred.lambda_h(u)
    if lambda_h > lambda_h_max:
        raise PreconditionError(
            f"lambda*h = {lambda_h:.4g} exceeds lambda_h_max = {lambda_h_max} (n={n}, H={H}, L={L})"
        )
    check_terms(2 * half)
    k = np.arange(-half + 1, half + 1, dtype=np.int64)
    psi = pred.lattice_values(k, u)
    psi0 = PerturbedGaussianPredicate(H=H).lattice_values(k, u)

    total, err = deterministic_sum(psi)
    total0, err0 = deterministic_sum(psi0)
    remainder, err_phi = deterministic_sum(psi - psi0)

    h = pred.h
    scale = 1.0 / math.sqrt(n * h)
    T0 = total0 * scale
    Tphi = remainder * scale
    Eglob = total / math.sqrt(n)
    split_defect = abs(Eglob - math.sqrt(h) * (T0 + Tphi))
    t0_defect = abs(math.sqrt(h) * T0 - gauss_closed_form_discrete(H, 0, n))

    # e^{σiπ/4} = e^{-πi(-σ/4)}
    unit = eval_phase(Fraction(-sign_ledger.DISCRETE_GAUSS_PHASE, 4))
    ratio = Eglob / (math.sqrt(2 * math.pi * h) * unit)

    # first order in θ_k = πHk⁴/(Ln): Σψ = Σψ0·(1 - iθ_k) + R, |R| <= Σθ_k²/2
    if L is None:
        c1 = 0j
        tolerance = 0.0
    else:
        theta = math.pi * H * k.astype(np.float64) ** 4 / (L * n)
        weighted, _ = deterministic_sum(psi0 * theta)
        first = -1j * weighted / total0
        c1 = first / lambda_h
        tolerance = float(np.sum(theta * theta)) / 2.0 / abs(total0)
    predicted = 1 + c1 * lambda_h
    fp_err = (err + err0 + err_phi) / abs(total0)
    return AnharmonicReport(
        n=n,
        H=H,
        L=L,
        h=h,
        lam=pred.lam(u),
        lambda_h=lambda_h,
        Eglob=Eglob,
        T0=T0,
        Tphi=Tphi,
        ratio=ratio,
        predicted=predicted,
        c1=c1,
        residual=abs(ratio - predicted),
        tolerance=tolerance,
        split_defect=split_defect,
        t0_defect=t0_defect,
        fp_err=fp_err,
    )


def anharmonic_continuum_check(
    lambda_h_values: Iterable[float] = DEFAULT_LAMBDA_H,
    tolerances: Optional[Tolerances] = None,
) -> VerificationReport:
    """Rotated-contour quadrature of ∫e^{-i(y² + λh·y⁴)/2}dy against 1 + (3/2)iλh."""
    tol = tolerances or Tolerances()
    first = float(sign_ledger.ANHARMONIC_FIRST_ORDER)
    second = float(sign_ledger.ANHARMONIC_SECOND_ORDER)
    rows: list[dict[str, Any]] = []
    for eps in lambda_h_values:
        ratio = sign_ledger.anharmonic_continuum_ratio(eps)
        predicted = 1 + 1j * first * eps
        residual = abs(ratio - predicted)
        bound = tol.anharmonic_continuum_factor * eps * eps
        rows.append(
            {
                "lambda_h": eps,
                "ratio": complex_pair(ratio),
                "predicted": complex_pair(predicted),
                "residual": residual,
                "second_order_residual": abs(ratio - predicted - second * eps * eps),
                "bound": bound,
                "pass": residual <= bound,
            }
        )
    return VerificationReport(
        kind="anharmonic-continuum",
        params={"first_order": first, "second_order": second},
        rows=rows,
        passed=all(r["pass"] for r in rows),
        tolerances={"anharmonic_continuum_factor": tol.anharmonic_continuum_factor},
    )


def anharmonic_scaling_grid(
    H_values: Sequence[int] = DEFAULT_H_GRID,
    lambda_h_values: Sequence[float] = DEFAULT_LAMBDA_H,
    period_multiple: int = DEFAULT_PERIOD_MULTIPLE,
    tolerances: Optional[Tolerances] = None,
) -> VerificationReport:
    """|T_φ|/(λh·(n/H)^{5/2}) across an (H, L) grid; passes when max/min <= scaling_factor."""
    tol = tolerances or Tolerances()
    rows: list[dict[str, Any]] = []
    for H in H_values:
        n = 2 * H * period_multiple
        for target in lambda_h_values:
            L = auto_L(period_multiple, target)
            report = anharmonic_check(H, L, n, lambda_h_max=math.inf)
            normalized = abs(report.Tphi) / (report.lambda_h * (n / H) ** 2.5)
            rows.append(
                {
                    "H": H,
                    "L": L,
                    "n": n,
                    "lambda_h": report.lambda_h,
                    "Tphi": complex_pair(report.Tphi),
                    "normalized": normalized,
                }
            )
    values = [r["normalized"] for r in rows]
    spread = max(values) / min(values) if values and min(values) > 0 else math.inf
    return VerificationReport(
        kind="anharmonic-scaling",
        params={"period_multiple": period_multiple, "spread": spread if math.isfinite(spread) else None},
        rows=rows,
        passed=spread <= tol.scaling_factor,
        tolerances={"scaling_factor": tol.scaling_factor},
    )
