"""Integral-kernel operators and the free and harmonic propagators."""

import cmath
import math
from typing import Any, Callable, Optional, Sequence, Union

import numpy as np
from pydantic import BaseModel, Field

from latticeq import sign_ledger
from latticeq.core.phase import polynomial_numerators, unit_phases
from latticeq.core.universe import FiniteUniverse, Interval
from latticeq.errors import PreconditionError
from latticeq.quantifier.quantifiers import check_window, lattice_range
from latticeq.quantifier.results import Window
from latticeq.quantifier.summation import check_terms, deterministic_sum

_BLOCK = 256


def free_propagator_kernel(t: float, x: Any, x0: Any) -> Any:
    """⟨x|K^t|x0⟩ = (2πit)^{-1/2}·e^{i(x-x0)²/(2t)} with the principal square root."""
    if t == 0:
        raise PreconditionError("Free propagator is singular at t = 0")
    prefactor = 1.0 / cmath.sqrt(2j * math.pi * t)
    return prefactor * np.exp(1j * (np.asarray(x) - np.asarray(x0)) ** 2 / (2 * t))


def harmonic_kernel(
    omega: float,
    t: float,
    hbar: float,
    x: Any,
    x0: Any,
    cross: int = sign_ledger.HARMONIC_CROSS_TERM,
) -> Any:
    """Mehler kernel sqrt(ω/(2πiħ sin ωt))·exp(iω((x0²+x²)cos ωt - cross·x0·x)/(2ħ sin ωt))."""
    if omega <= 0 or hbar <= 0:
        raise PreconditionError(f"Harmonic kernel needs ω > 0 and ħ > 0, got ω={omega}, ħ={hbar}")
    if cross not in (1, 2):
        raise PreconditionError(f"Cross-term coefficient must be 1 or 2, got {cross}")
    s = math.sin(omega * t)
    turns = omega * t / math.pi
    if abs(s) < 1e-15 or abs(turns - round(turns)) < 1e-12:
        raise PreconditionError(f"Harmonic kernel has a caustic at ωt = {omega * t} (multiple of π)")
    c = math.cos(omega * t)
    x = np.asarray(x, dtype=np.float64)
    x0 = np.asarray(x0, dtype=np.float64)
    prefactor = cmath.sqrt(omega / (2j * math.pi * hbar * s))
    return prefactor * np.exp(1j * omega * ((x0 * x0 + x * x) * c - cross * x0 * x) / (2 * hbar * s))


class TabulatedPredicate(BaseModel):
    """A predicate given by its values on every lattice point of one universe."""

    universe: FiniteUniverse
    values: np.ndarray

    model_config = {"frozen": True, "arbitrary_types_allowed": True}

    @property
    def support(self) -> Optional[Interval]:
        return None

    def lattice_values(
        self, k: np.ndarray, u: FiniteUniverse, params: Sequence[int] = ()
    ) -> np.ndarray:
        if u != self.universe:
            raise PreconditionError("Tabulated predicate evaluated on a different universe")
        k = np.asarray(k, dtype=np.int64)
        inside = (k >= u.lo) & (k <= u.hi)
        out = np.zeros(k.shape, dtype=np.complex128)
        out[inside] = self.values[k[inside] - u.lo]
        return out


class KernelOperator(BaseModel):
    """L_κ: ψ ↦ E_x κ(z, x)·ψ(x).

    ``kappa`` maps broadcast lattice arrays (z, x) and the universe to kernel
    values. ``support`` optionally bounds the x-domain of every row.
    """

    kappa: Callable[[np.ndarray, np.ndarray, FiniteUniverse], np.ndarray]
    name: str = Field(default="kernel")
    support: Optional[Interval] = None

    model_config = {"frozen": True, "arbitrary_types_allowed": True}


WindowArg = Union[Window, str]


def _range_for(window: WindowArg, u: FiniteUniverse) -> tuple[int, int]:
    if isinstance(window, Window):
        check_window(window, u)
        return lattice_range(window, u)
    if window == "universe":
        return u.lo, u.hi
    raise PreconditionError(f"Unknown kernel window {window!r}")


def _check_support(kernel: KernelOperator, window: WindowArg) -> None:
    if kernel.support is None:
        return
    inside = isinstance(window, Window) and (
        kernel.support.lo <= window.m1 and window.m2 <= kernel.support.hi
    )
    if not inside:
        raise PreconditionError(
            f"Kernel '{kernel.name}' is supported on [{kernel.support.lo}, "
            f"{kernel.support.hi}]; the x-window must lie inside it"
        )


def apply_kernel_at(
    kernel: KernelOperator,
    psi: Any,
    u: FiniteUniverse,
    z: int,
    window: WindowArg = "universe",
    params: Sequence[int] = (),
) -> complex:
    """(L_κ ψ)(z) at a single lattice point, one row of apply_kernel."""
    if not u.contains(z):
        raise PreconditionError(f"Lattice point {z} outside universe range [{u.lo}, {u.hi}] for n={u.n}")
    _check_support(kernel, window)
    x_lo, x_hi = _range_for(window, u)
    x = np.arange(x_lo, x_hi + 1, dtype=np.int64)
    check_terms(x.size)
    row = np.asarray(kernel.kappa(np.int64(z), x, u), dtype=np.complex128)
    row = np.broadcast_to(row, x.shape) * psi.lattice_values(x, u, tuple(params))
    total, _ = deterministic_sum(row)
    return complex(u.spacing * total)


def apply_kernel(
    kernel: KernelOperator,
    psi: Any,
    u: FiniteUniverse,
    window: WindowArg = "universe",
    params: Sequence[int] = (),
    z_window: Optional[WindowArg] = None,
) -> TabulatedPredicate:
    """For each z, the quantifier in x of κ(z, x)·ψ(x, ȳ) over ``window``."""
    _check_support(kernel, window)
    x_lo, x_hi = _range_for(window, u)
    z_lo, z_hi = _range_for(z_window if z_window is not None else window, u)
    x = np.arange(x_lo, x_hi + 1, dtype=np.int64)
    z_all = np.arange(z_lo, z_hi + 1, dtype=np.int64)
    check_terms(x.size * z_all.size)
    psi_values = psi.lattice_values(x, u, tuple(params))
    values = np.zeros(u.n, dtype=np.complex128)
    for start in range(0, z_all.size, _BLOCK):
        z = z_all[start:start + _BLOCK]
        rows = np.asarray(kernel.kappa(z[:, None], x[None, :], u), dtype=np.complex128)
        rows = np.broadcast_to(rows, (z.size, x.size)) * psi_values[None, :]
        for i, zi in enumerate(z):
            total, _ = deterministic_sum(rows[i])
            values[zi - u.lo] = u.spacing * total
    return TabulatedPredicate(universe=u, values=values)


def identity_kernel() -> KernelOperator:
    """Reproducing kernel [z = x]/spacing."""

    def kappa(z: np.ndarray, x: np.ndarray, u: FiniteUniverse) -> np.ndarray:
        return np.where(z == x, 1.0 / u.spacing, 0.0)

    return KernelOperator(kappa=kappa, name="identity")


def fourier_kernel() -> KernelOperator:
    """e^{-2πi h_n z x/n}/(spacing·sqrt n): L_κ reproduces fourier_forward."""

    def kappa(z: np.ndarray, x: np.ndarray, u: FiniteUniverse) -> np.ndarray:
        zx = (z * x) % u.n
        phases = unit_phases(polynomial_numerators(zx.ravel(), (0, 2 * u.h_n), 2 * u.n), u.n)
        return phases.reshape(zx.shape) / (u.spacing * math.sqrt(u.n))

    return KernelOperator(kappa=kappa, name="fourier")


def free_kernel(t: float = 1.0) -> KernelOperator:
    def kappa(z: np.ndarray, x: np.ndarray, u: FiniteUniverse) -> np.ndarray:
        return free_propagator_kernel(t, z * u.spacing, x * u.spacing)

    return KernelOperator(kappa=kappa, name="free")


def harmonic(
    omega: float = 1.0, t: float = 1.0, hbar: float = 1.0, cross: int = sign_ledger.HARMONIC_CROSS_TERM
) -> KernelOperator:
    def kappa(z: np.ndarray, x: np.ndarray, u: FiniteUniverse) -> np.ndarray:
        return harmonic_kernel(omega, t, hbar, z * u.spacing, x * u.spacing, cross)

    return KernelOperator(kappa=kappa, name="harmonic")


def zero_kernel() -> KernelOperator:
    def kappa(z: np.ndarray, x: np.ndarray, u: FiniteUniverse) -> np.ndarray:
        return np.zeros(np.broadcast(z, x).shape)

    return KernelOperator(kappa=kappa, name="zero")


KERNELS: dict[str, Callable[..., KernelOperator]] = {
    "identity": identity_kernel,
    "fourier": fourier_kernel,
    "free": free_kernel,
    "harmonic": harmonic,
    "zero": zero_kernel,
}


def kernel_by_name(name: str, **params: Any) -> KernelOperator:
    try:
        factory = KERNELS[name]
    except KeyError:
        raise PreconditionError(
            f"Unknown kernel '{name}'; choose one of {', '.join(sorted(KERNELS))}"
        ) from None
    return factory(**params)
