"""Fourier duality, Weyl relations and propagator checks."""

import logging
import math
from typing import Any, Optional, Sequence

import numpy as np

from latticeq.config import Tolerances
from latticeq.core.universe import make_universe
from latticeq.operators.fourier import (
    DENSE_LIMIT,
    evolve_free,
    fourier_forward,
    fourier_inverse,
    momentum_vector,
    v_eigenvalue,
)
from latticeq.operators.kernels import (
    TabulatedPredicate,
    apply_kernel,
    fourier_kernel,
    free_propagator_kernel,
    harmonic_kernel,
)
from latticeq.operators.state import StateVector
from latticeq.operators.weyl import commutation_defect, weyl_u, weyl_v
from latticeq.schemas.report import VerificationReport, complex_pair

logger = logging.getLogger(__name__)

DEFAULT_SIZES = (16, 256, 4096)

# kernel-vs-transform comparison is quadratic in n
KERNEL_CHECK_LIMIT = 256

DEGENERATION_OMEGA = 1e-4
DEGENERATION_TOLERANCE = 1e-5


def fourier_check(
    n_values: Sequence[int] = DEFAULT_SIZES,
    trials: int = 10,
    seed: int = 0,
    tolerances: Optional[Tolerances] = None,
) -> VerificationReport:
    """F⁻¹F = id, Parseval and agreement of the dense and FFT paths on random states."""
    tol = tolerances or Tolerances()
    rng = np.random.default_rng(seed)
    rows: list[dict[str, Any]] = []
    for n in n_values:
        u = make_universe(int(n))
        inverse_defect = parseval_defect = 0.0
        path_defect: Optional[float] = None
        kernel_defect: Optional[float] = None
        for _ in range(trials):
            psi = StateVector.random(u, rng)
            forward = fourier_forward(psi)
            back = fourier_inverse(forward)
            inverse_defect = max(inverse_defect, float(np.max(np.abs(back.amplitudes - psi.amplitudes))))
            parseval_defect = max(parseval_defect, abs(forward.norm() - psi.norm()))
            if u.n <= DENSE_LIMIT:
                fast = fourier_forward(psi, method="fast")
                dense = fourier_forward(psi, method="dense")
                gap = float(np.max(np.abs(fast.amplitudes - dense.amplitudes)))
                path_defect = gap if path_defect is None else max(path_defect, gap)
        if u.n <= KERNEL_CHECK_LIMIT:
            psi = StateVector.random(u, rng)
            as_function = TabulatedPredicate(universe=u, values=psi.amplitudes / u.spacing)
            image = apply_kernel(fourier_kernel(), as_function, u)
            kernel_defect = float(
                np.max(np.abs(image.values * u.spacing - fourier_forward(psi).amplitudes))
            )
        passed = inverse_defect <= tol.fourier_inverse and parseval_defect <= tol.parseval
        if path_defect is not None:
            passed = passed and path_defect <= tol.fast_vs_dense
        if kernel_defect is not None:
            passed = passed and kernel_defect <= tol.fast_vs_dense
        rows.append(
            {
                "n": u.n,
                "inverse_defect": inverse_defect,
                "parseval_defect": parseval_defect,
                "fast_vs_dense": path_defect,
                "kernel_defect": kernel_defect,
                "pass": passed,
            }
        )
        logger.debug("Fourier n=%d: inverse %.3g, parseval %.3g", u.n, inverse_defect, parseval_defect)
    return VerificationReport(
        kind="fourier",
        params={"n_values": [int(n) for n in n_values], "trials": trials, "seed": seed},
        rows=rows,
        passed=all(r["pass"] for r in rows),
        tolerances={
            "fourier_inverse": tol.fourier_inverse,
            "parseval": tol.parseval,
            "fast_vs_dense": tol.fast_vs_dense,
        },
    )


def weyl_check(
    n_values: Sequence[int] = DEFAULT_SIZES,
    trials: int = 100,
    h_n: int = 1,
    seed: int = 0,
    tolerances: Optional[Tolerances] = None,
) -> VerificationReport:
    """UV = e^{iνh}VU, isometry of U and V, and V acting diagonally on v[p]."""
    tol = tolerances or Tolerances()
    rng = np.random.default_rng(seed)
    rows: list[dict[str, Any]] = []
    for n in n_values:
        u = make_universe(int(n), h_n)
        commutation = commutation_defect(u, trials=trials, seed=seed)
        isometry = 0.0
        for _ in range(min(trials, 10)):
            psi = StateVector.random(u, rng)
            isometry = max(
                isometry,
                abs(weyl_u(psi).norm() - psi.norm()),
                abs(weyl_v(psi).norm() - psi.norm()),
            )
        eigen = 0.0
        for p in (0, 1, u.n // 3, u.lo):
            v_p = momentum_vector(u, p)
            gap = weyl_v(v_p).amplitudes - v_eigenvalue(u, p) * v_p.amplitudes
            eigen = max(eigen, float(np.linalg.norm(gap)))
        rows.append(
            {
                "n": u.n,
                "h_n": h_n,
                "commutation_defect": commutation,
                "isometry_defect": isometry,
                "eigenvector_defect": eigen,
                "pass": commutation <= tol.commutation
                and isometry <= tol.isometry
                and eigen <= tol.isometry,
            }
        )
    return VerificationReport(
        kind="weyl",
        params={"n_values": [int(n) for n in n_values], "trials": trials, "h_n": h_n, "seed": seed},
        rows=rows,
        passed=all(r["pass"] for r in rows),
        tolerances={"commutation": tol.commutation, "isometry": tol.isometry},
    )


def propagator_check(
    n: int = 40_000,
    t: float = 1.0,
    x0: int = 0,
    tolerances: Optional[Tolerances] = None,
) -> VerificationReport:
    """Spectral evolution of u[x0] against the free kernel on the central half.

    The evolved coefficient at r should be spacing·K^t(x_r, x_{x0}), of
    modulus spacing/sqrt(2π|t|). A second row checks that the harmonic
    kernel degenerates to the free one as ω → 0.
    """
    tol = tolerances or Tolerances()
    u = make_universe(n)
    evolved = evolve_free(StateVector.basis(u, x0), t)
    quarter = u.n // 4
    r = np.arange(-quarter, quarter + 1, dtype=np.int64)
    coeffs = evolved.amplitudes[r - u.lo]
    expected = u.spacing * free_propagator_kernel(t, r * u.spacing, x0 * u.spacing)
    modulus = u.spacing / math.sqrt(2 * math.pi * abs(t))
    modulus_error = float(np.max(np.abs(np.abs(coeffs) - modulus))) / modulus
    kernel_error = float(np.max(np.abs(coeffs - expected))) / modulus

    x = np.linspace(-4.0, 4.0, 33)
    free = free_propagator_kernel(1.0, x, 0.5)
    mehler = harmonic_kernel(DEGENERATION_OMEGA, 1.0, 1.0, x, 0.5, cross=2)
    literal = harmonic_kernel(DEGENERATION_OMEGA, 1.0, 1.0, x, 0.5, cross=1)
    degeneration = float(np.max(np.abs(mehler - free) / np.abs(free)))
    literal_gap = float(np.max(np.abs(literal - free) / np.abs(free)))
    logger.info(
        "Propagator n=%d t=%g: modulus error %.3g, degeneration %.3g", n, t, modulus_error, degeneration
    )
    rows = [
        {
            "check": "free-evolution",
            "n": u.n,
            "t": t,
            "x0": x0,
            "sites": int(r.size),
            "modulus": modulus,
            "sample": complex_pair(complex(coeffs[quarter])),
            "modulus_error": modulus_error,
            "kernel_error": kernel_error,
            "pass": modulus_error <= tol.propagator_rel,
        },
        {
            "check": "harmonic-degeneration",
            "omega": DEGENERATION_OMEGA,
            "relative_error": degeneration,
            "literal_cross_term_gap": literal_gap,
            "pass": degeneration <= DEGENERATION_TOLERANCE,
        },
    ]
    return VerificationReport(
        kind="propagator",
        params={"n": n, "t": t, "x0": x0},
        rows=rows,
        passed=all(r["pass"] for r in rows),
        tolerances={"propagator_rel": tol.propagator_rel, "degeneration": DEGENERATION_TOLERANCE},
    )
