"""Tests for the verification harnesses."""

import cmath
import math
from fractions import Fraction

import pytest

from latticeq.config import Tolerances
from latticeq.core.forms import LinearForm, sample_dense_points
from latticeq.core.universe import make_universe
from latticeq.errors import PreconditionError
from latticeq.quantifier.results import Window
from latticeq.verify import (
    QUANTITIES,
    anharmonic_check,
    anharmonic_continuum_check,
    anharmonic_scaling_grid,
    auto_L,
    convergence_sweep,
    convergence_sweep_async,
    delta_check,
    error_bound,
    fit_decay_exponent,
    fourier_check,
    gauss_continuum_check,
    gauss_lemma_check,
    gaussian_in_k,
    local_global_check,
    propagator_check,
    quantity_by_name,
    riemann_error_bound,
    weyl_check,
)


class TestBounds:
    def test_riemann_bound(self):
        bound = riemann_error_bound(1.0, Window(m1=-4.0, m2=4.0), make_universe(10**6))
        assert bound == pytest.approx(0.010027, abs=1e-5)

    def test_bound_halves_when_n_quadruples(self):
        w = Window(m1=-4.0, m2=4.0)
        coarse = riemann_error_bound(1.0, w, make_universe(10**6))
        fine = riemann_error_bound(1.0, w, make_universe(4 * 10**6))
        assert fine == pytest.approx(coarse / 2)

    def test_constant_function_has_zero_bound(self):
        assert riemann_error_bound(0.0, Window(m1=-1.0, m2=1.0), make_universe(1000)) == 0.0

    def test_negative_lipschitz_rejected(self):
        with pytest.raises(PreconditionError, match="nonnegative"):
            riemann_error_bound(-1.0, Window(m1=-1.0, m2=1.0), make_universe(1000))

    def test_error_bound_model(self):
        eb = error_bound(2.0, Window(m1=0.0, m2=3.0), make_universe(1000))
        assert eb.window_length == 3.0
        assert eb.n == 1000
        assert eb.bound == pytest.approx(3.0 * make_universe(1000).spacing)


class TestConvergence:
    def test_fit_decay_exponent(self):
        alpha = fit_decay_exponent([10_000, 40_000, 160_000], [1e-2, 5e-3, 2.5e-3])
        assert alpha == pytest.approx(0.5)

    def test_fit_needs_two_rows(self):
        assert fit_decay_exponent([10_000], [1e-2]) is None
        assert fit_decay_exponent([10_000, 40_000], [1e-2, 0.0]) is None

    def test_unknown_quantity(self):
        with pytest.raises(PreconditionError, match="Unknown quantity"):
            quantity_by_name("nope")

    def test_registered_quantities(self):
        assert set(QUANTITIES) == {"gaussian-window", "gaussian-norm", "constant-window"}

    def test_constant_window_sweep(self):
        report = convergence_sweep("constant-window", [16_000, 1_000, 4_000])
        assert [r.n for r in report.rows] == [1_000, 4_000, 16_000]
        for row in report.rows:
            s = make_universe(row.n).spacing
            assert row.error <= s
            # closed lattice range: one more point than the realized length
            assert row.realized_error == pytest.approx(s, rel=1e-9)
        assert report.dominated()
        assert report.alpha == pytest.approx(0.5, abs=1e-6)

    @pytest.mark.asyncio
    async def test_gaussian_window_sweep(self):
        report = await convergence_sweep_async("gaussian-window", [10_000, 40_000, 160_000])
        assert report.window == (-4.0, 4.0)
        assert report.dominated()
        assert 0.35 <= report.alpha <= 0.65
        for row in report.rows:
            assert row.value == pytest.approx(math.sqrt(math.pi), abs=1e-6)

    def test_duplicate_sizes_rejected(self):
        with pytest.raises(PreconditionError, match="distinct"):
            convergence_sweep("constant-window", [1000, 1000])

    def test_verification_report_from_sweep(self):
        report = convergence_sweep("constant-window", [1_000, 4_000, 16_000])
        verification = report.to_verification_report(Tolerances())
        assert verification.kind == "converge"
        assert verification.passed
        assert len(verification.rows) == 3


class TestGaussLemma:
    def test_dense_points_match_closed_form(self):
        report = gauss_lemma_check(1, LinearForm.of(1), [[0], [5], [-7]], 240)
        assert report.passed
        assert all(row["member"] for row in report.rows)
        assert all(row["residual"] <= 1e-8 for row in report.rows)

    def test_points_outside_dense_set_use_full_cycle(self):
        report = gauss_lemma_check(2, LinearForm.of(1), [[0], [1], [2]], 240)
        assert report.passed
        members = [row["member"] for row in report.rows]
        assert members == [True, False, True]
        assert report.rows[1]["cycle_magnitude"] <= 1e-10
        assert "residual" not in report.rows[1]

    def test_report_params(self):
        report = gauss_lemma_check("3/2", LinearForm.of(1), [[0], [3]], 240)
        assert report.params == {"a": "3/2", "b": ["1"], "n": 240, "h_n": 1}
        assert report.tolerances == {"gauss_dense": 1e-8, "gauss_zero": 1e-10}

    def test_gaussian_in_k(self):
        pred = gaussian_in_k(2, LinearForm.of(3))
        assert pred.form.m == 2

    @pytest.mark.slow
    @pytest.mark.parametrize("a", [1, 2, "1/2", "3/2", 4])
    def test_highly_divisible_acceptance(self, a):
        # b = 1/4 leaves points outside X_a for every a here
        b_form = LinearForm.of(Fraction(1, 4))
        inside = sample_dense_points(a, b_form, 5, member=True)
        outside = sample_dense_points(a, b_form, 5, member=False)
        assert len(inside) == len(outside) == 5
        report = gauss_lemma_check(a, b_form, inside + outside, 1441440)
        assert report.passed
        assert [row["member"] for row in report.rows] == [True] * 5 + [False] * 5


class TestGaussContinuum:
    @pytest.mark.parametrize("a", [1, 4])
    @pytest.mark.parametrize("b", [0, 1])
    def test_scaled_sum_matches_integral(self, a, b):
        b_form = LinearForm.of(b)
        points = sample_dense_points(a, b_form, 4)
        report = gauss_continuum_check(a, b_form, points, 240)
        assert report.passed
        assert len(report.rows) == 4
        assert all(row["residual"] <= 1e-8 for row in report.rows)
        assert all(row["sampling_defect"] <= 1e-10 for row in report.rows)

    def test_unit_gaussian_value(self):
        report = gauss_continuum_check(4, LinearForm(), [()], 240)
        expected = math.sqrt(2 * math.pi) / 2 * cmath.exp(-1j * math.pi / 4)
        assert complex(*report.rows[0]["integral"]) == pytest.approx(expected, abs=1e-12)
        assert complex(*report.rows[0]["lattice"]) == pytest.approx(expected, abs=1e-9)

    def test_points_outside_dense_set_skipped(self):
        report = gauss_continuum_check(2, LinearForm.of(1), [[0], [1], [2]], 240)
        assert [row["p"] for row in report.rows] == [[0], [2]]
        assert report.kind == "gauss-continuum"
        assert report.tolerances == {"gauss_continuum": 1e-8}

    def test_no_dense_point(self):
        with pytest.raises(PreconditionError, match="d-dense"):
            gauss_continuum_check(2, LinearForm.of(1), [[1]], 240)

    def test_needs_positive_a(self):
        with pytest.raises(PreconditionError, match="a > 0"):
            gauss_continuum_check(-1, LinearForm(), [()], 240)


class TestDelta:
    def test_delta_identity(self):
        report = delta_check([1, 2, 5], [0, 1, 2, 3, 2000, 5000], 10_000)
        assert report.passed
        assert len(report.rows) == 18


class TestLocalGlobal:
    @pytest.mark.parametrize("a", [1, 4])
    def test_tail_gaps_within_bound(self, a):
        report = local_global_check(gaussian_in_k(a, LinearForm()), (), make_universe(10**6))
        assert report.passed
        assert report.params["m_max"] == 199
        assert [row["m"] for row in report.rows] == list(range(1, 200))
        assert not report.rows[0]["checked"]

    def test_gap_shrinks_with_a(self):
        u = make_universe(10**6)
        wide = local_global_check(gaussian_in_k(1, LinearForm()), (), u)
        narrow = local_global_check(gaussian_in_k(4, LinearForm()), (), u)
        # gap(m) ≈ 2/(a·m)
        ratio = wide.rows[49]["tail_gap"] / narrow.rows[49]["tail_gap"]
        assert 3.0 <= ratio <= 5.0
        assert 1.8 <= wide.rows[49]["tail_gap"] * 50 <= 2.2

    def test_parameter_outside_dense_set_rejected(self):
        with pytest.raises(PreconditionError, match="d-dense"):
            local_global_check(gaussian_in_k(2, LinearForm.of(1)), (1,), make_universe(10**6))

    def test_nonpositive_a_rejected(self):
        with pytest.raises(ValueError):
            local_global_check(gaussian_in_k(-1, LinearForm()), (), make_universe(10**6))


class TestAnharmonic:
    def test_unperturbed_has_no_remainder(self):
        report = anharmonic_check(100, None, 400)
        assert report.Tphi == 0
        assert report.lambda_h == 0.0
        assert all(report.checks(1e-10).values())

    def test_first_order_agreement(self):
        L = auto_L(2, 0.01)
        assert L == 64
        report = anharmonic_check(10_000, L, 40_000)
        assert report.lambda_h == pytest.approx(2 / (64 * math.pi))
        assert report.residual <= report.tolerance + 10 * report.fp_err
        assert all(report.checks(1e-10).values())
        assert report.to_verification_report(1e-10).passed

    def test_lambda_h_ceiling(self):
        with pytest.raises(PreconditionError, match="exceeds"):
            anharmonic_check(100, 1, 400)

    def test_auto_L(self):
        assert [auto_L(2, x) for x in (0.005, 0.01, 0.02)] == [127, 64, 32]
        with pytest.raises(PreconditionError):
            auto_L(2, 0.0)

    def test_continuum_check(self):
        report = anharmonic_continuum_check()
        assert report.passed
        assert [row["lambda_h"] for row in report.rows] == [0.005, 0.01, 0.02]
        assert report.params["first_order"] == 1.5

    def test_scaling_grid(self):
        report = anharmonic_scaling_grid()
        assert report.passed
        assert len(report.rows) == 9
        assert report.params["spread"] <= 3.0


class TestOperatorChecks:
    def test_fourier(self):
        report = fourier_check([16, 64], trials=3)
        assert report.passed
        assert report.rows[0]["kernel_defect"] is not None

    def test_weyl(self):
        report = weyl_check([16, 256], trials=20, h_n=3)
        assert report.passed
        assert {row["h_n"] for row in report.rows} == {3}

    def test_propagator(self):
        report = propagator_check(4000)
        assert report.passed
        free, harmonic = report.rows
        assert free["sites"] == 2001
        assert harmonic["literal_cross_term_gap"] > harmonic["relative_error"]
