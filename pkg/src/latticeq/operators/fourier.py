"""The h_n-twisted discrete Fourier transform between the u- and v-bases.

v[p] = (1/sqrt n) Σ_r e^{2πi h_n r p/n} u[r]. ``fourier_forward`` maps
u-coordinates to v-coordinates, ``fourier_inverse`` maps back. Up to
DENSE_LIMIT points the transform is a direct sum with exact root-of-unity
phases; above it numpy's FFT is used with the h_n twist folded into an index
permutation (a bijection because gcd(h_n, n) = 1).
"""

import logging
import math
from typing import Literal

import numpy as np

from latticeq.core.phase import eval_phase, unit_phases
from latticeq.core.universe import FiniteUniverse
from latticeq.operators.state import StateVector

logger = logging.getLogger(__name__)

DENSE_LIMIT = 4096
_BLOCK = 512

Method = Literal["auto", "dense", "fast"]


def _dense(amps: np.ndarray, u: FiniteUniverse, sign: int) -> np.ndarray:
    # out_p = (1/sqrt n) Σ_r e^{sign·2πi h r p/n} amps_r = Σ_r e^{-πi(-sign·2 h r p)/n} amps_r
    n = u.n
    r = u.points()
    out = np.empty(n, dtype=np.complex128)
    for start in range(0, n, _BLOCK):
        p = r[start:start + _BLOCK]
        products = np.outer(p, r) % n
        numerators = (-sign * 2 * u.h_n % (2 * n)) * products % (2 * n)
        out[start:start + _BLOCK] = unit_phases(numerators, n) @ amps
    return out / math.sqrt(n)


def _twist_index(u: FiniteUniverse) -> np.ndarray:
    """q = h_n·p mod n for p in storage order."""
    return (u.h_n * u.points()) % u.n


def _fast_forward(amps: np.ndarray, u: FiniteUniverse) -> np.ndarray:
    n = u.n
    signs = np.where(np.arange(n) % 2 == 0, 1.0, -1.0)
    z = np.fft.fft(amps) * signs / math.sqrt(n)
    return z[_twist_index(u)]


def _fast_inverse(amps: np.ndarray, u: FiniteUniverse) -> np.ndarray:
    n = u.n
    y = np.empty(n, dtype=np.complex128)
    y[_twist_index(u)] = amps
    signs = np.where(np.arange(n) % 2 == 0, 1.0, -1.0)
    return np.fft.ifft(signs * y) * math.sqrt(n)


def _use_dense(u: FiniteUniverse, method: Method) -> bool:
    if method == "auto":
        return u.n <= DENSE_LIMIT
    return method == "dense"


def fourier_forward(state: StateVector, method: Method = "auto") -> StateVector:
    u = state.universe
    if _use_dense(u, method):
        return state.with_amplitudes(_dense(state.amplitudes, u, -1))
    return state.with_amplitudes(_fast_forward(state.amplitudes, u))


def fourier_inverse(state: StateVector, method: Method = "auto") -> StateVector:
    u = state.universe
    if _use_dense(u, method):
        return state.with_amplitudes(_dense(state.amplitudes, u, 1))
    return state.with_amplitudes(_fast_inverse(state.amplitudes, u))


def momentum_vector(u: FiniteUniverse, p: int, method: Method = "auto") -> StateVector:
    """u-coordinates of v[p]."""
    return fourier_inverse(StateVector.basis(u, p), method)


def momentum_index(u: FiniteUniverse, p: int) -> int:
    """Centred q ≡ h_n·p (mod n): v[p] oscillates as e^{iν q r}."""
    return u.wrap(u.h_n * p)


def momentum_of(u: FiniteUniverse, p: int) -> float:
    """Physical momentum q·spacing carried by v[p]."""
    return momentum_index(u, p) * u.spacing


def v_eigenvalue(u: FiniteUniverse, p: int) -> complex:
    """Eigenvalue of V on v[p]: e^{-iν h_n² p}."""
    return eval_phase(u.nu * u.h_n * u.h_n * p)


def evolve_free(state: StateVector, t: float, method: Method = "auto") -> StateVector:
    """Free evolution K^t: multiply v[p] by e^{-it(q_p·spacing)²/2}."""
    if t == 0:
        return state
    u = state.universe
    forward = fourier_forward(state, method)
    q = ((u.h_n * u.points() - u.lo) % u.n + u.lo).astype(np.float64)
    # (q·spacing)²/2 = π q²/n
    phases = np.exp(-1j * t * np.pi * q * q / u.n)
    return fourier_inverse(forward.with_amplitudes(forward.amplitudes * phases), method)
