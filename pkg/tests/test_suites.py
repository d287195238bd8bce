"""Tests for the built-in verification suites and report schema."""

import json

import pytest

from latticeq.config import RunConfig
from latticeq.errors import PreconditionError
from latticeq.schemas.report import VerificationReport
from latticeq.schemas.suite import ParameterType, SuiteParameter
from latticeq.suites import (
    BUILTIN_SUITES,
    anharmonic,
    converge,
    fourier,
    gauss,
    local_global,
    propagator,
    weyl,
)
from latticeq.suites.anharmonic import _resolve_L


class TestBuiltins:
    def test_names(self):
        assert [s.name for s in BUILTIN_SUITES] == [
            "gauss",
            "local-global",
            "converge",
            "fourier",
            "weyl",
            "propagator",
            "anharmonic",
        ]

    def test_every_parameter_is_optional(self):
        for s in BUILTIN_SUITES:
            assert all(not p.required for p in s.parameters), s.name

    def test_json_schema(self):
        schema = anharmonic.to_json_schema()
        assert schema["type"] == "object"
        assert schema["required"] == []
        assert schema["properties"]["lambda_h"] == {
            "type": "number",
            "description": "Target perturbation strength λh when L is 'auto'",
            "default": 0.01,
        }
        assert converge.to_json_schema()["properties"]["quantity"]["enum"] == [
            "constant-window",
            "gaussian-norm",
            "gaussian-window",
        ]
        assert gauss.to_json_schema()["properties"]["b"]["items"] == {"type": "string"}

    def test_flag(self):
        assert anharmonic.parameter("lambda_h").flag == "--lambda-h"
        assert SuiteParameter(
            name="n_values", type=ParameterType.ARRAY, description="sizes"
        ).flag == "--n-values"
        assert gauss.parameter("nope") is None


class TestGaussSuite:
    @pytest.mark.asyncio
    async def test_default_coefficients(self):
        result = await gauss.execute(config=RunConfig(n=240))
        assert result.passed
        checks = {row["check"] for row in result.data.rows}
        assert checks == {"gauss", "gauss-continuum", "delta"}
        assert result.data.params["gauss"]["n"] == 240
        assert result.data.params["gauss-continuum"]["n"] == 240
        assert result.data.params["delta"]["n"] == 10_000

    @pytest.mark.asyncio
    async def test_rational_a_samples_both_sides(self):
        result = await gauss.execute(a="3/2", delta_b=[], config=RunConfig(n=240))
        assert result.passed
        members = [row["member"] for row in result.data.rows if row["check"] == "gauss"]
        assert members.count(True) == 5
        assert members.count(False) == 5
        continuum = [row for row in result.data.rows if row["check"] == "gauss-continuum"]
        assert len(continuum) == 5

    @pytest.mark.asyncio
    async def test_continuum_can_be_skipped(self):
        result = await gauss.execute(continuum=False, delta_b=[], config=RunConfig(n=240))
        assert result.passed
        assert {row["check"] for row in result.data.rows} == {"gauss"}

    @pytest.mark.asyncio
    async def test_negative_a_rejected(self):
        result = await gauss.execute(a="-1", delta_b=[], config=RunConfig(n=240))
        assert result.success is False
        assert result.error_kind == "precondition"

    @pytest.mark.asyncio
    async def test_bad_coefficient(self):
        result = await gauss.execute(a="one", config=RunConfig(n=240))
        assert result.success is False
        assert result.error_kind == "precondition"
        assert "rational" in result.error

    @pytest.mark.asyncio
    async def test_samples_must_be_positive(self):
        result = await gauss.execute(samples=0, config=RunConfig(n=240))
        assert result.error_kind == "precondition"


class TestLocalGlobalSuite:
    @pytest.mark.asyncio
    async def test_small_universe(self):
        result = await local_global.execute(config=RunConfig(n=10_000))
        assert result.passed
        assert result.data.params["m_max"] == 19

    @pytest.mark.asyncio
    async def test_linear_term(self):
        result = await local_global.execute(a="2", b=["1"], p=[2], config=RunConfig(n=10_000))
        assert result.passed
        assert result.data.params["p"] == [2]

    @pytest.mark.asyncio
    async def test_parameter_count_mismatch(self):
        result = await local_global.execute(b=["1"], config=RunConfig(n=10_000))
        assert result.success is False
        assert "coefficient" in result.error

    @pytest.mark.asyncio
    async def test_tight_tail_constant_fails(self):
        result = await local_global.execute(config=RunConfig(n=10_000, c_tail=0.001))
        assert result.success is True
        assert result.passed is False


class TestConvergeSuite:
    @pytest.mark.asyncio
    async def test_constant_window(self):
        result = await converge.execute(
            quantity="constant-window", n_values=[1_000, 4_000, 16_000]
        )
        assert result.passed
        assert result.data.params["alpha"] == pytest.approx(0.5, abs=1e-6)

    @pytest.mark.asyncio
    async def test_unknown_quantity(self):
        result = await converge.execute(quantity="nope")
        assert result.success is False
        assert result.error_kind == "precondition"
        assert "must be one of" in result.error


class TestOperatorSuites:
    @pytest.mark.asyncio
    async def test_fourier(self):
        result = await fourier.execute(n_values=[16, 64], trials=2)
        assert result.passed
        assert [row["n"] for row in result.data.rows] == [16, 64]

    @pytest.mark.asyncio
    async def test_weyl_uses_config_planck_integer(self):
        result = await weyl.execute(n_values=[16], trials=10, config=RunConfig(h_n=3))
        assert result.passed
        assert result.data.rows[0]["h_n"] == 3

    @pytest.mark.asyncio
    async def test_propagator(self):
        result = await propagator.execute(config=RunConfig(n=4000))
        assert result.passed
        assert result.data.params["n"] == 4000

    @pytest.mark.asyncio
    async def test_propagator_rejects_zero_time(self):
        result = await propagator.execute(t=0.0, config=RunConfig(n=4000))
        assert result.success is False


class TestAnharmonicSuite:
    @pytest.mark.asyncio
    async def test_default(self):
        result = await anharmonic.execute()
        assert result.passed
        assert [row["check"] for row in result.data.rows] == ["anharmonic", "anharmonic-continuum"]
        assert result.data.params["anharmonic"]["L"] == 64

    @pytest.mark.asyncio
    async def test_unperturbed(self):
        result = await anharmonic.execute(L="none")
        assert result.passed
        assert [row["check"] for row in result.data.rows] == ["anharmonic"]

    @pytest.mark.asyncio
    async def test_scaling_grid(self):
        result = await anharmonic.execute(scaling=True, continuum=False)
        assert result.passed
        assert sum(row["check"] == "anharmonic-scaling" for row in result.data.rows) == 9

    @pytest.mark.asyncio
    async def test_universe_must_be_period_multiple(self):
        result = await anharmonic.execute(config=RunConfig(n=30_000))
        assert result.success is False
        assert "multiple of 2H" in result.error

    def test_resolve_L(self):
        assert _resolve_L("auto", 2, 0.01) == 64
        assert _resolve_L("none", 2, 0.01) is None
        assert _resolve_L("INF", 2, 0.01) is None
        assert _resolve_L("17", 2, 0.01) == 17
        with pytest.raises(PreconditionError, match="positive integer"):
            _resolve_L("x", 2, 0.01)


class TestVerificationReport:
    @pytest.fixture
    def report(self):
        return VerificationReport(
            kind="delta",
            params={"n": 10},
            rows=[{"p": 0, "pass": True}],
            passed=True,
            tolerances={"delta": 1e-10},
        )

    def test_key_order(self, report):
        assert list(report.to_document()) == [
            "kind",
            "params",
            "rows",
            "pass",
            "tolerances",
            "sign_ledger_version",
        ]
        assert json.loads(report.to_json())["pass"] is True

    def test_round_trip(self, report):
        assert VerificationReport.from_json(report.to_json()) == report

    def test_with_params(self, report):
        extended = report.with_params({"config": {"n": 10}})
        assert extended.params == {"n": 10, "config": {"n": 10}}
        assert report.params == {"n": 10}

    def test_combine(self, report):
        failing = VerificationReport(kind="gauss", rows=[{"p": [1]}], passed=False, tolerances={"gauss_dense": 1e-8})
        combined = VerificationReport.combine("gauss", [failing, report])
        assert combined.passed is False
        assert combined.params == {"gauss": {}, "delta": {"n": 10}}
        assert [row["check"] for row in combined.rows] == ["gauss", "delta"]
        assert combined.tolerances == {"gauss_dense": 1e-8, "delta": 1e-10}

    def test_combine_needs_parts(self):
        with pytest.raises(ValueError, match="no parts"):
            VerificationReport.combine("gauss", [])
