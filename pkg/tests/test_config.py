"""Tests for run configuration."""

import pytest
from pydantic import ValidationError

from latticeq.config import (
    THREADS_ENV_VAR,
    RunConfig,
    Tolerances,
    load_config_file,
    resolve_run_config,
)


@pytest.fixture
def config_file(tmp_path):
    path = tmp_path / "run.conf"
    path.write_text(
        "# local-global settings\n"
        "\n"
        "c_tail = 2.5\n"
        "threads=4\n"
        "terms-ceiling = 1000\n"
        "tolerances.delta = 1e-6\n",
        encoding="utf-8",
    )
    return path


@pytest.fixture(autouse=True)
def clear_threads_env(monkeypatch):
    monkeypatch.delenv(THREADS_ENV_VAR, raising=False)


class TestRunConfig:
    def test_defaults(self):
        config = RunConfig()
        assert config.n is None
        assert config.h_n == 1
        assert config.threads == 1
        assert config.c_tail == 3.0
        assert config.lambda_h_max == 0.05
        assert config.format == "json"
        assert config.sign_ledger_version == "1"
        assert config.tolerances == Tolerances()

    def test_threads_must_be_positive(self):
        with pytest.raises(ValidationError, match="threads"):
            RunConfig(threads=0)

    def test_unknown_format(self):
        with pytest.raises(ValidationError, match="format"):
            RunConfig(format="xml")

    def test_unknown_key_rejected(self):
        with pytest.raises(ValidationError):
            RunConfig(colour="blue")

    def test_unknown_tolerance_rejected(self):
        with pytest.raises(ValidationError):
            RunConfig(tolerances={"gauss": 1e-3})

    def test_echo_excludes_run_location(self):
        echo = RunConfig(n=100, threads=8, out_dir="/tmp/x", format="csv").echo()
        assert echo["n"] == 100
        assert "threads" not in echo
        assert "out_dir" not in echo
        assert "format" not in echo
        assert echo["tolerances"]["gauss_dense"] == 1e-8


class TestConfigFile:
    def test_load(self, config_file):
        values = load_config_file(config_file)
        assert values == {
            "c_tail": "2.5",
            "threads": "4",
            "terms_ceiling": "1000",
            "tolerances": {"delta": "1e-6"},
        }

    def test_bad_line(self, tmp_path):
        path = tmp_path / "bad.conf"
        path.write_text("c_tail 2.5\n", encoding="utf-8")
        with pytest.raises(ValueError, match="bad.conf:1: expected key=value"):
            load_config_file(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_config_file(tmp_path / "absent.conf")


class TestResolve:
    def test_defaults_only(self):
        assert resolve_run_config() == RunConfig()

    def test_file_values_are_coerced(self, config_file):
        config = resolve_run_config(config_path=config_file)
        assert config.c_tail == 2.5
        assert config.threads == 4
        assert config.terms_ceiling == 1000
        assert config.tolerances.delta == 1e-6
        assert config.tolerances.gauss_dense == 1e-8

    def test_flags_override_file(self, config_file):
        config = resolve_run_config(
            {"c_tail": 1.0, "threads": None, "tolerances": {"gauss_zero": 1e-12}}, config_file
        )
        assert config.c_tail == 1.0
        assert config.threads == 4
        assert config.tolerances.delta == 1e-6
        assert config.tolerances.gauss_zero == 1e-12

    def test_environment_threads(self, monkeypatch):
        monkeypatch.setenv(THREADS_ENV_VAR, "3")
        assert resolve_run_config().threads == 3

    def test_file_overrides_environment(self, monkeypatch, config_file):
        monkeypatch.setenv(THREADS_ENV_VAR, "3")
        assert resolve_run_config(config_path=config_file).threads == 4

    def test_flag_overrides_environment(self, monkeypatch):
        monkeypatch.setenv(THREADS_ENV_VAR, "3")
        assert resolve_run_config({"threads": 2}).threads == 2

    def test_invalid_merged_value(self):
        with pytest.raises(ValidationError):
            resolve_run_config({"threads": -1})
