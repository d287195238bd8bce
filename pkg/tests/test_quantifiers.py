"""Tests for quantifiers, closed forms and deterministic summation."""

import cmath
import math
from fractions import Fraction

import numpy as np
import pytest
from scipy import special

from latticeq.core.forms import LinearForm, QuadraticForm
from latticeq.core.predicates import GaussianPredicate, PerturbedGaussianPredicate, SampledPredicate, SumPredicate
from latticeq.core.universe import Interval, make_universe
from latticeq.errors import PreconditionError, TermsCeilingError
from latticeq.quantifier import (
    DiscreteDelta,
    QuantifierResult,
    Window,
    cycle_order,
    deterministic_sum,
    discrete_delta_sum,
    full_cycle_sum,
    gauss_closed_form_continuum,
    gauss_closed_form_discrete,
    global_quantify,
    inner_product,
    lattice_span,
    local_quantify,
    norm,
    summation_period,
    thread_count,
    universe_quantify,
    use_terms_ceiling,
    use_threads,
    window_quantify,
)
from latticeq.quantifier.summation import CHUNK_SIZE, check_terms
from latticeq.verify.gauss import gaussian_in_k

ROOT_I = cmath.exp(-1j * math.pi / 4)


def gaussian(a, cross=None):
    """e^{-πi(a k² + 2k·p)/n}, or e^{-πi a k²/n} without a parameter."""
    if cross is None:
        return GaussianPredicate(form=QuadraticForm.diagonal(a))
    return GaussianPredicate(form=QuadraticForm.from_terms(2, {(0, 0): a, (0, 1): 2 * cross}))


@pytest.fixture
def bump():
    return SampledPredicate(fn=lambda x: np.exp(-x * x), lipschitz=math.sqrt(2 / math.e), sup=1.0)


@pytest.fixture
def unit_box():
    return SampledPredicate(fn=np.ones_like, domain=Interval(lo=-1.0, hi=1.0))


class TestWindows:
    def test_window_requires_order(self):
        with pytest.raises(ValueError):
            Window(m1=1.0, m2=1.0)

    def test_symmetric(self):
        w = Window.symmetric(3.0)
        assert (w.m1, w.m2, w.length) == (-3.0, 3.0, 6.0)

    def test_lattice_span_is_clipped(self):
        u = make_universe(8)
        assert lattice_span(-100.0, 100.0, u) == (u.lo, u.hi)

    def test_lattice_span_includes_endpoints(self):
        u = make_universe(8)
        s = u.spacing
        assert lattice_span(-s, 2 * s, u) == (-1, 2)


class TestWindowQuantifier:
    def test_constant_window(self, unit_box):
        u = make_universe(10**6)
        result = window_quantify(unit_box, Window(m1=-1.0, m2=1.0), u)
        assert abs(result.complex_value - 2.0) <= u.spacing
        assert result.terms == 797

    def test_odd_function_cancels(self):
        u = make_universe(1000)
        result = window_quantify(SampledPredicate(fn=lambda x: x), Window(m1=-2.0, m2=2.0), u)
        assert abs(result.complex_value) < 1e-12

    def test_gaussian_integral(self, bump):
        u = make_universe(10**6)
        result = window_quantify(bump, Window(m1=-4.0, m2=4.0), u)
        assert result.complex_value == pytest.approx(math.sqrt(math.pi) * special.erf(4.0), abs=1e-6)

    def test_window_too_wide(self, bump):
        with pytest.raises(PreconditionError, match="exceeding"):
            window_quantify(bump, Window(m1=-3.0, m2=3.0), make_universe(100))

    def test_linearity(self):
        u = make_universe(1000)
        w = Window(m1=-3.0, m2=3.0)
        psi = SampledPredicate(fn=lambda x: np.exp(-x * x) * np.cos(x))
        phi = SampledPredicate(fn=lambda x: x * x * np.exp(1j * x))
        combined = window_quantify(SumPredicate(terms=((2, psi), (1j, phi))), w, u).complex_value
        separate = 2 * window_quantify(psi, w, u).complex_value + 1j * window_quantify(phi, w, u).complex_value
        assert combined == pytest.approx(separate, abs=1e-12)

    def test_window_additivity(self, bump):
        u = make_universe(1000)
        _, k_mid = lattice_span(-2.0, 0.5, u)
        left = window_quantify(bump, Window(m1=-2.0, m2=0.5), u)
        right = window_quantify(bump, Window(m1=(k_mid + 1) * u.spacing, m2=2.0), u)
        whole = window_quantify(bump, Window(m1=-2.0, m2=2.0), u)
        tolerance = left.fp_error_estimate + right.fp_error_estimate + whole.fp_error_estimate + 1e-14
        assert abs(left.complex_value + right.complex_value - whole.complex_value) <= tolerance

    def test_result_json(self, unit_box):
        result = window_quantify(unit_box, Window(m1=-1.0, m2=1.0), make_universe(1000))
        data = result.to_json_dict()
        assert set(data) == {"value", "window", "terms", "fp_err", "k_range"}
        assert data["window"] == {"m1": -1.0, "m2": 1.0}
        assert data["fp_err"] >= 0

    def test_universe_quantify(self):
        u = make_universe(16)
        result = universe_quantify(SampledPredicate(fn=np.ones_like), u)
        assert result.terms == 16
        assert result.window == "universe"
        assert result.complex_value == pytest.approx(16 * u.spacing)


class TestLocalQuantifier:
    def test_fixed_max(self, bump):
        result = local_quantify(bump, make_universe(10**6))
        assert result.window == Window.symmetric(199)
        assert result.complex_value == pytest.approx(math.sqrt(math.pi), abs=1e-6)

    def test_sequence_grows_linearly_for_constants(self):
        u = make_universe(10**6)
        sequence = local_quantify(SampledPredicate(fn=np.ones_like), u, mode="sequence")
        assert len(sequence) == 199
        for m, result in enumerate(sequence, start=1):
            assert abs(result.complex_value - 2 * m) <= u.spacing

    def test_sequence_matches_fixed_windows(self, bump):
        u = make_universe(40_000)
        sequence = local_quantify(bump, u, mode="sequence")
        for m in (1, 3, len(sequence)):
            direct = window_quantify(bump, Window.symmetric(m), u)
            assert sequence[m - 1].complex_value == pytest.approx(direct.complex_value, abs=1e-13)

    def test_gaussian_approaches_global_value(self):
        sequence = local_quantify(gaussian(1), make_universe(10**6), mode="sequence")
        expected = math.sqrt(2 * math.pi) * ROOT_I
        assert abs(sequence[-1].complex_value - expected) <= 3 / 199

    def test_degenerate_universe(self, bump):
        with pytest.raises(PreconditionError, match="degenerate"):
            local_quantify(bump, make_universe(8))


class TestGlobalQuantifier:
    @pytest.mark.parametrize("n", [2, 4, 720720])
    def test_unit_gaussian(self, n):
        result = global_quantify(gaussian(1), make_universe(n))
        assert result.complex_value == pytest.approx(ROOT_I, abs=1e-9)
        assert result.terms == n
        assert result.window == "global"

    def test_unit_gaussian_without_parameters(self):
        pred = gaussian_in_k(1, LinearForm())
        result = global_quantify(pred, make_universe(1441440))
        assert result.complex_value == pytest.approx(ROOT_I, abs=1e-9)
        assert summation_period(pred) == 1

    def test_pure_cross_term_is_delta(self):
        pred = GaussianPredicate(form=QuadraticForm.from_terms(2, {(0, 1): 2}))
        result = global_quantify(pred, make_universe(100), (0,))
        assert result.complex_value == pytest.approx(10.0, abs=1e-12)
        assert result.terms == 100

    def test_divisibility_failure_names_factor(self):
        with pytest.raises(PreconditionError, match="multiple of 3"):
            global_quantify(gaussian(Fraction(3, 2)), make_universe(100))

    def test_non_gaussian_rejected(self, bump):
        with pytest.raises(PreconditionError, match="Gaussian"):
            global_quantify(bump, make_universe(100))

    def test_summation_period(self):
        assert summation_period(gaussian(Fraction(3, 2), 1), (1,)) == Fraction(3, 2)
        assert summation_period(PerturbedGaussianPredicate(H=7)) == 7

    def test_perturbed_unperturbed_limit(self):
        result = global_quantify(PerturbedGaussianPredicate(H=5), make_universe(40))
        assert result.complex_value == pytest.approx(gauss_closed_form_discrete(5, 0, 40), abs=1e-12)

    @pytest.mark.parametrize("a", [1, 2, Fraction(1, 2), Fraction(3, 2), 4])
    @pytest.mark.parametrize("p", [0, 12, -24])
    def test_matches_closed_form(self, a, p):
        u = make_universe(240)
        result = global_quantify(gaussian(a, 1), u, (p,))
        assert result.complex_value == pytest.approx(gauss_closed_form_discrete(a, p, 240), abs=1e-10)

    def test_range_shift_invariance(self):
        u = make_universe(48)
        pred = gaussian(2, 1)
        result = global_quantify(pred, u, (2,))
        k = np.arange(-11, 13, dtype=np.int64) + 24
        shifted, _ = deterministic_sum(pred.lattice_values(k, u, (2,)))
        assert result.complex_value == pytest.approx(shifted / math.sqrt(48), abs=1e-10)


class TestFullCycle:
    def test_vanishes_off_dense_set(self):
        pred = gaussian(Fraction(3, 2), 1)
        assert cycle_order(pred, (1,)) == 3
        result = full_cycle_sum(pred, make_universe(36), (1,))
        assert result.terms == 72
        assert abs(result.complex_value) < 1e-12

    def test_single_period_on_dense_set(self):
        pred = gaussian(Fraction(3, 2), 1)
        u = make_universe(36)
        assert cycle_order(pred, (3,)) == 1
        assert full_cycle_sum(pred, u, (3,)).complex_value == pytest.approx(
            global_quantify(pred, u, (3,)).complex_value, abs=1e-12
        )


class TestInnerProduct:
    def test_disjoint_supports(self):
        psi = SampledPredicate(fn=np.ones_like, domain=Interval(lo=-2.0, hi=-1.0))
        phi = SampledPredicate(fn=np.ones_like, domain=Interval(lo=1.0, hi=2.0))
        assert inner_product(psi, phi, make_universe(1000)) == 0j

    def test_normalized_gaussian(self):
        psi = SampledPredicate(fn=lambda x: math.pi**-0.25 * np.exp(-x * x / 2))
        value = inner_product(psi, psi, make_universe(10**6), Window(m1=-8.0, m2=8.0))
        assert value == pytest.approx(1.0, abs=1e-6)

    def test_conjugate_symmetry_and_sesquilinearity(self):
        u = make_universe(1000)
        w = Window(m1=-3.0, m2=3.0)
        psi = SampledPredicate(fn=lambda x: np.exp(1j * x) * np.exp(-x * x))
        phi = SampledPredicate(fn=lambda x: np.exp(-x * x / 2) * (1 + x))
        forward = inner_product(psi, phi, u, w)
        assert forward == pytest.approx(inner_product(phi, psi, u, w).conjugate(), abs=1e-12)
        c = 2 - 3j
        assert inner_product(psi.scaled(c), phi, u, w) == pytest.approx(c * forward, abs=1e-12)
        assert inner_product(psi, phi.scaled(c), u, w) == pytest.approx(c.conjugate() * forward, abs=1e-12)

    def test_unbounded_needs_window(self):
        psi = SampledPredicate(fn=np.ones_like)
        with pytest.raises(PreconditionError, match="window"):
            inner_product(psi, psi, make_universe(100))

    def test_universe_policy(self):
        u = make_universe(16)
        psi = SampledPredicate(fn=np.ones_like)
        assert inner_product(psi, psi, u, "universe") == pytest.approx(16 * u.spacing)

    def test_norm(self):
        u = make_universe(1000)
        psi = SampledPredicate(fn=lambda x: np.exp(-x * x), domain=Interval(lo=-3.0, hi=3.0))
        zero = SampledPredicate(fn=np.zeros_like)
        assert norm(zero, u, "universe") == 0.0
        assert norm(psi.scaled(3 - 4j), u) == pytest.approx(5 * norm(psi, u))


class TestClosedForms:
    def test_unit_discrete(self):
        assert gauss_closed_form_discrete(1, 0, 16) == pytest.approx(ROOT_I)
        assert gauss_closed_form_discrete(4, 0, 16) == pytest.approx(0.5 * ROOT_I)

    def test_shifted_discrete(self):
        assert gauss_closed_form_discrete(1, 4, 16) == pytest.approx(-ROOT_I)

    def test_discrete_preconditions(self):
        with pytest.raises(PreconditionError):
            gauss_closed_form_discrete(0, 0, 16)
        with pytest.raises(PreconditionError, match="n/\\(2a\\)"):
            gauss_closed_form_discrete(3, 0, 10)
        with pytest.raises(PreconditionError, match="d-dense"):
            gauss_closed_form_discrete(2, 1, 8)

    def test_continuum(self):
        root = cmath.exp(1j * math.pi / 4)
        assert gauss_closed_form_continuum(1.0, 0.0) == pytest.approx(root)
        assert gauss_closed_form_continuum(2.0, 0.0) == pytest.approx(root / math.sqrt(2))
        assert gauss_closed_form_continuum(-1.0, 0.0) == pytest.approx(root.conjugate())
        assert abs(gauss_closed_form_continuum(2.0, 0.7)) == pytest.approx(1 / math.sqrt(2))

    def test_continuum_rejects_zero(self):
        with pytest.raises(PreconditionError, match="delta"):
            gauss_closed_form_continuum(0.0, 1.0)


class TestDiscreteDelta:
    def test_values(self):
        delta = DiscreteDelta(n=100)
        assert delta.value(0) == 10.0
        assert delta.value(100) == 10.0
        assert delta.value(3) == 0.0
        assert delta.value(Fraction(1, 2)) == 0.0

    @pytest.mark.parametrize(
        "b, p, expected", [(1, 0, 10.0), (1, 4, 0.0), (2, 0, 5.0), (2, 50, 5.0), (5, 7, 0.0)]
    )
    def test_sum_identity(self, b, p, expected):
        lhs, rhs = discrete_delta_sum(b, p, make_universe(100))
        assert rhs == expected
        assert lhs == pytest.approx(rhs, abs=1e-10)

    def test_divisibility(self):
        with pytest.raises(PreconditionError):
            discrete_delta_sum(3, 0, make_universe(100))


class TestDeterministicSummation:
    def test_empty(self):
        assert deterministic_sum(np.array([], dtype=complex)) == (0j, 0.0)

    def test_thread_count_does_not_change_bits(self):
        rng = np.random.default_rng(7)
        values = rng.normal(size=5 * CHUNK_SIZE + 123) + 1j * rng.normal(size=5 * CHUNK_SIZE + 123)
        results = []
        for threads in (1, 2, 8):
            with use_threads(threads):
                assert thread_count() == threads
                results.append(deterministic_sum(values))
        assert results[0] == results[1] == results[2]
        assert thread_count() == 1

    def test_error_estimate_bounds_error(self):
        rng = np.random.default_rng(3)
        values = rng.uniform(-1, 1, size=200_000).astype(complex)
        total, err = deterministic_sum(values)
        assert abs(total.real - math.fsum(values.real)) <= err

    def test_terms_ceiling(self):
        with use_terms_ceiling(10):
            check_terms(10)
            with pytest.raises(TermsCeilingError, match="ceiling"):
                check_terms(11)
            with pytest.raises(TermsCeilingError):
                universe_quantify(SampledPredicate(fn=np.ones_like), make_universe(16))

    def test_result_alias(self):
        result = QuantifierResult.of(1 + 2j, "global", 3, 0.5)
        assert result.fp_error_estimate == 0.5
        assert result.to_json_dict() == {"value": [1.0, 2.0], "window": "global", "terms": 3, "fp_err": 0.5}
