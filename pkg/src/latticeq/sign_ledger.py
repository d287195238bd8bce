"""Frozen sign and typo conventions, together with the oracles that fixed them.

The constants are used by the closed forms throughout the package. Each one
has a calibration function computing the same quantity independently
(brute-force summation, Fresnel integrals or rotated-contour quadrature);
the test-suite asserts that constants and oracles agree. Bump
SIGN_LEDGER_VERSION whenever a constant changes: every report embeds it.
"""

import cmath
import math
from fractions import Fraction

import numpy as np
from scipy import integrate, special

SIGN_LEDGER_VERSION = "1"

# (1/sqrt n) sum_{-n/2a < k <= n/2a} e^{-pi i a k^2 / n} = sqrt(1/a) e^{sigma i pi/4}
DISCRETE_GAUSS_PHASE = -1

# completing the square leaves e^{+pi i b^2/(a n)} in the discrete closed form
DISCRETE_SHIFT_PHASE = 1

# int e^{pi i a x^2} dx = |a|^{-1/2} e^{sigma' i pi/4 sign(a)}
CONTINUUM_FRESNEL_PHASE = 1

# free kernel exponent reads (x - x0)^2
FREE_PROPAGATOR_EXPONENT = "(x-x0)^2"

# Mehler cross term 2 x x0; 1 is the literal alternative behind a flag
HARMONIC_CROSS_TERM = 2

# perturbed Gaussian states use e^{-pi i H (k^2 + k^4/L) / n}
ANHARMONIC_DENOMINATOR = "n"

# int e^{-i(y^2 + e y^4)/2} dy / (sqrt(2 pi) e^{-i pi/4}) = 1 + (3/2) i e - (105/8) e^2 + ...
ANHARMONIC_FIRST_ORDER = Fraction(3, 2)
ANHARMONIC_SECOND_ORDER = Fraction(-105, 8)


def ledger() -> dict[str, str]:
    """The ledger as a flat, serializable mapping."""
    return {
        "version": SIGN_LEDGER_VERSION,
        "discrete_gauss_phase": str(DISCRETE_GAUSS_PHASE),
        "discrete_shift_phase": str(DISCRETE_SHIFT_PHASE),
        "continuum_fresnel_phase": str(CONTINUUM_FRESNEL_PHASE),
        "free_propagator_exponent": FREE_PROPAGATOR_EXPONENT,
        "harmonic_cross_term": str(HARMONIC_CROSS_TERM),
        "anharmonic_denominator": ANHARMONIC_DENOMINATOR,
        "anharmonic_first_order": str(ANHARMONIC_FIRST_ORDER),
    }


def _direct_gauss_sum(a: int, b: int, n: int) -> complex:
    """(1/sqrt n) sum over (-n/2a, n/2a] of e^{-pi i (a k^2 + 2 k b)/n}, plain loop."""
    half = n // (2 * a)
    total = 0j
    for k in range(-half + 1, half + 1):
        total += cmath.exp(-1j * math.pi * (a * k * k + 2 * k * b) / n)
    return total / math.sqrt(n)


def calibrate_discrete_gauss_phase(sizes: tuple[int, ...] = (2, 4, 8, 16)) -> int:
    """Sign of the e^{i pi/4} factor seen by direct summation with a = 1, b = 0."""
    signs = set()
    for n in sizes:
        value = _direct_gauss_sum(1, 0, n)
        signs.add(1 if value.imag > 0 else -1)
    if len(signs) != 1:
        raise RuntimeError(f"Discrete Gauss phase oracle disagrees across sizes {sizes}")
    return signs.pop()


def calibrate_discrete_shift_phase(n: int = 16, a: int = 1, b: int = 1) -> int:
    """Sign of the b^2/(a n) phase: compare a shifted sum with the unshifted one."""
    ratio = _direct_gauss_sum(a, b, n) / _direct_gauss_sum(a, 0, n)
    plus = cmath.exp(1j * math.pi * b * b / (a * n))
    minus = cmath.exp(-1j * math.pi * b * b / (a * n))
    return 1 if abs(ratio - plus) < abs(ratio - minus) else -1


def fresnel_integral(a: float, cutoff: float = 1e4) -> complex:
    """int_{-X}^{X} e^{pi i a x^2} dx through scipy's Fresnel integrals."""
    scale = math.sqrt(2.0 * abs(a))
    s_val, c_val = special.fresnel(cutoff * scale)
    value = 2.0 * complex(float(c_val), float(s_val)) / scale
    return value if a > 0 else value.conjugate()


def calibrate_continuum_fresnel_phase() -> int:
    """Sign of the e^{i pi/4} factor of int e^{pi i x^2} dx."""
    return 1 if fresnel_integral(1.0).imag > 0 else -1


def anharmonic_continuum_ratio(epsilon: float) -> complex:
    """int e^{-i(y^2 + epsilon y^4)/2} dy normalized by sqrt(2 pi) e^{-i pi/4}.

    The contour is rotated to y = e^{-i pi/8} t, where the integrand decays
    like e^{-epsilon t^4/2 - t^2/(2 sqrt 2)}.
    """
    rot = cmath.exp(-1j * math.pi / 8)
    quad_coeff = cmath.exp(-3j * math.pi / 4) / 2

    def integrand(t: float) -> complex:
        return cmath.exp(quad_coeff * t * t - epsilon * t**4 / 2) * rot

    def real_part(t: float) -> float:
        return integrand(t).real

    def imag_part(t: float) -> float:
        return integrand(t).imag

    re, _ = integrate.quad(real_part, 0.0, np.inf, epsabs=1e-14, epsrel=1e-13, limit=400)
    im, _ = integrate.quad(imag_part, 0.0, np.inf, epsabs=1e-14, epsrel=1e-13, limit=400)
    total = 2.0 * complex(re, im)
    return total / (math.sqrt(2.0 * math.pi) * cmath.exp(-1j * math.pi / 4))


def calibrate_anharmonic_first_order(epsilon: float = 1e-4) -> float:
    """Imaginary first-order coefficient c of 1 + i c epsilon, by finite difference."""
    # the real part carries the even orders, so Im/epsilon is 3/2 + O(epsilon^2)
    return anharmonic_continuum_ratio(epsilon).imag / epsilon


def calibrate_harmonic_cross_term(omega: float = 1e-4, t: float = 1.0) -> int:
    """Cross-term coefficient under which the harmonic kernel degenerates to the free one."""
    x, x0 = 0.7, -0.4
    free = cmath.exp(1j * (x - x0) ** 2 / (2 * t)) / cmath.sqrt(2j * math.pi * t)
    best, best_err = 0, math.inf
    for cross in (1, 2):
        s = math.sin(omega * t)
        c = math.cos(omega * t)
        value = cmath.sqrt(omega / (2j * math.pi * s)) * cmath.exp(
            1j * omega * ((x0 * x0 + x * x) * c - cross * x0 * x) / (2 * s)
        )
        err = abs(value - free)
        if err < best_err:
            best, best_err = cross, err
    return best
