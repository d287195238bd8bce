"""The Weyl pair U: u[r] ↦ e^{irν}u[r] and V: u[r] ↦ u[r + h_n]."""

import numpy as np

from latticeq.core.phase import eval_phase, polynomial_numerators, unit_phases
from latticeq.core.universe import FiniteUniverse
from latticeq.operators.state import StateVector


def position_phases(u: FiniteUniverse, multiple: int = 1) -> np.ndarray:
    """e^{i·multiple·r·ν} for every lattice point r, as exact roots of unity."""
    # e^{2πi m r/n} = e^{-πi(-2 m r)/n}
    numerators = polynomial_numerators(u.points(), (0, -2 * multiple), 2 * u.n)
    return unit_phases(numerators, u.n)


def weyl_u(state: StateVector) -> StateVector:
    return state.with_amplitudes(state.amplitudes * position_phases(state.universe))


def weyl_v(state: StateVector, power: int = 1) -> StateVector:
    """Cyclic shift by power·h_n; index arithmetic wraps back into [-n/2, n/2)."""
    return state.with_amplitudes(np.roll(state.amplitudes, power * state.universe.h_n))


def commutation_phase(u: FiniteUniverse) -> complex:
    """e^{iν h_n}."""
    return eval_phase(-u.nu * u.h_n)


def commutation_defect(u: FiniteUniverse, trials: int = 100, seed: int = 0) -> float:
    """max over random ψ of ‖(UV - e^{iνh}VU)ψ‖ / ‖ψ‖."""
    rng = np.random.default_rng(seed)
    phase = commutation_phase(u)
    worst = 0.0
    for _ in range(trials):
        psi = StateVector.random(u, rng)
        lhs = weyl_u(weyl_v(psi)).amplitudes
        rhs = phase * weyl_v(weyl_u(psi)).amplitudes
        worst = max(worst, float(np.linalg.norm(lhs - rhs)) / psi.norm())
    return worst
