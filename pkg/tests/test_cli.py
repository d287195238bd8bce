"""Tests for the latticeq command line."""

import cmath
import json
import math

import pytest

from latticeq.cli.main import EXIT_FAIL, EXIT_IO, EXIT_PARSE, EXIT_PASS, EXIT_PRECONDITION, main
from latticeq.config import THREADS_ENV_VAR

GAUSSIAN = "exp(-pi*i*k^2/n)"


@pytest.fixture(autouse=True)
def clear_threads_env(monkeypatch):
    monkeypatch.delenv(THREADS_ENV_VAR, raising=False)


def run_json(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out) if out else None


class TestEval:
    def test_gaussian_at_point(self, capsys):
        code, payload = run_json(capsys, ["eval", GAUSSIAN, "--n", "4", "--at", "2"])
        assert code == EXIT_PASS
        re, im = payload["values"][0]["value"]
        assert re == pytest.approx(-1.0)
        assert im == pytest.approx(0.0, abs=1e-15)
        assert payload["canonical"] == "exp(-i*pi*k^2/n)"
        assert payload["classification"]["tag"] == "gaussian"
        assert "threads" not in payload["config"]

    def test_several_points(self, capsys):
        code, payload = run_json(capsys, ["eval", GAUSSIAN, "--n", "8", "--at", "0", "--at", "-2"])
        assert code == EXIT_PASS
        assert [row["at"] for row in payload["values"]] == [[0], [-2]]
        assert payload["values"][1]["value"][1] == pytest.approx(-1.0)

    def test_csv_format(self, capsys):
        assert main(["eval", GAUSSIAN, "--n", "4", "--at", "0", "--format", "csv"]) == EXIT_PASS
        assert capsys.readouterr().out.splitlines()[0] == "at.0,value.0,value.1"

    def test_odd_universe(self, capsys):
        assert main(["eval", GAUSSIAN, "--n", "5", "--at", "0"]) == EXIT_PRECONDITION
        assert "even" in capsys.readouterr().err

    def test_point_out_of_range(self):
        assert main(["eval", GAUSSIAN, "--n", "4", "--at", "3"]) == EXIT_PRECONDITION

    def test_half_universe_is_negative_half(self, capsys):
        _, upper = run_json(capsys, ["eval", GAUSSIAN, "--n", "4", "--at", "2"])
        _, lower = run_json(capsys, ["eval", GAUSSIAN, "--n", "4", "--at", "-2"])
        assert upper["values"][0]["value"] == lower["values"][0]["value"]

    def test_help_documents_wrap(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["eval", "--help"])
        assert exc.value.code == 0
        assert "-n/2" in capsys.readouterr().out

    def test_parse_error(self, capsys):
        assert main(["eval", "exp(-pi*i*k^2/n", "--n", "4", "--at", "0"]) == EXIT_PARSE
        assert "latticeq: 1:" in capsys.readouterr().err

    def test_long_flat_chain(self, capsys):
        chain = "+".join(["k"] * 5000)
        assert main(["eval", chain, "--n", "4", "--at", "1"]) == EXIT_PARSE
        assert "deeper" in capsys.readouterr().err

    def test_non_ascii_digit(self):
        assert main(["eval", "k^Â²", "--n", "4", "--at", "1"]) == EXIT_PARSE

    def test_non_ascii_point(self):
        with pytest.raises(SystemExit) as exc:
            main(["eval", GAUSSIAN, "--n", "4", "--at", "١"])
        assert exc.value.code == 2

    def test_missing_universe_size(self, capsys):
        assert main(["eval", GAUSSIAN, "--at", "0"]) == EXIT_PRECONDITION
        assert "--n" in capsys.readouterr().err

    def test_identity_kernel(self, capsys):
        code, payload = run_json(
            capsys, ["eval", GAUSSIAN, "--n", "4", "--at", "1", "--kernel", "identity"]
        )
        assert code == EXIT_PASS
        expected = cmath.exp(-1j * math.pi / 4)
        assert complex(*payload["values"][0]["value"]) == pytest.approx(expected, abs=1e-12)
        assert payload["kernel"] == "identity"


class TestQuantify:
    def test_global(self, capsys):
        code, payload = run_json(capsys, ["quantify", GAUSSIAN, "--global", "--n", "720720"])
        assert code == EXIT_PASS
        assert payload["mode"] == "global"
        assert payload["result"]["terms"] == 720720
        value = complex(*payload["result"]["value"])
        assert value == pytest.approx(cmath.exp(-1j * math.pi / 4), abs=1e-9)

    def test_window(self, capsys):
        code, payload = run_json(
            capsys, ["quantify", GAUSSIAN, "--window", "-4", "4", "--n", "1000000"]
        )
        assert code == EXIT_PASS
        assert payload["result"]["terms"] == 3191
        assert payload["result"]["window"] == {"m1": -4.0, "m2": 4.0}

    def test_global_needs_divisible_universe(self):
        argv = ["quantify", "exp(-pi*i*3*k^2/n)", "--global", "--n", "100"]
        assert main(argv) == EXIT_PRECONDITION

    def test_local_sequence(self, capsys):
        code, payload = run_json(
            capsys, ["quantify", GAUSSIAN, "--local", "--sequence", "--n", "10000"]
        )
        assert code == EXIT_PASS
        assert len(payload["result"]) == 19

    def test_cycle_needs_gaussian(self):
        argv = ["quantify", "exp(-pi*i*(2*k^2 + 3*k^4)/n)", "--cycle", "--n", "100"]
        assert main(argv) == EXIT_PRECONDITION

    def test_modes_are_exclusive(self):
        with pytest.raises(SystemExit) as exc:
            main(["quantify", GAUSSIAN, "--global", "--local", "--n", "100"])
        assert exc.value.code == 2


class TestUniverseInfo:
    def test_highly_divisible(self, capsys):
        code, payload = run_json(capsys, ["universe-info", "--n", "1441440"])
        assert code == EXIT_PASS
        assert payload["divisibility_bound"] == 16
        assert payload["m_max"] == 239
        assert payload["range"] == [-720720, 720719]


class TestVerify:
    def test_gauss_writes_reports(self, capsys, tmp_path):
        out = tmp_path / "reports"
        argv = ["verify", "gauss", "--a", "1", "--b", "0", "--n", "1441440", "--out", str(out)]
        code, payload = run_json(capsys, argv)
        assert code == EXIT_PASS
        assert payload["pass"] is True
        assert payload["sign_ledger_version"] == "1"
        assert (out / "gauss.json").exists()
        assert (out / "gauss.csv").exists()

    def test_bad_parameter(self, capsys):
        assert main(["verify", "gauss", "--a", "x", "--n", "240"]) == EXIT_PRECONDITION
        err = capsys.readouterr().err
        assert "rational" in err
        assert err.startswith("latticeq: error (precondition): ")

    def test_unknown_flag(self):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "gauss", "--bogus"])
        assert exc.value.code == 2

    def test_config_file_failure(self, capsys, tmp_path):
        config = tmp_path / "tight.conf"
        config.write_text("c_tail = 0.001\n", encoding="utf-8")
        code = main(["verify", "local-global", "--n", "10000", "--config", str(config)])
        assert code == EXIT_FAIL
        assert json.loads(capsys.readouterr().out)["pass"] is False

    def test_anharmonic(self, capsys):
        code, payload = run_json(capsys, ["verify", "anharmonic"])
        assert code == EXIT_PASS
        assert payload["kind"] == "anharmonic"

    def test_output_independent_of_threads(self, capsys):
        assert main(["verify", "anharmonic", "--threads", "1"]) == EXIT_PASS
        single = capsys.readouterr().out
        assert main(["verify", "anharmonic", "--threads", "8"]) == EXIT_PASS
        assert capsys.readouterr().out == single

    def test_table_format(self, capsys):
        code = main(["verify", "fourier", "--n-values", "16", "--trials", "2", "--format", "table"])
        assert code == EXIT_PASS
        assert capsys.readouterr().out.startswith("fourier: PASS")


class TestPlotData:
    def test_local_global_columns(self, capsys, tmp_path):
        assert main(["verify", "local-global", "--n", "10000", "--out", str(tmp_path)]) == EXIT_PASS
        capsys.readouterr()
        assert main(["plotdata", str(tmp_path / "local-global.json")]) == EXIT_PASS
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "m,tail_gap"
        assert len(lines) == 20

    def test_output_file(self, capsys, tmp_path):
        main(["verify", "local-global", "--n", "10000", "--out", str(tmp_path)])
        target = tmp_path / "plot.csv"
        argv = ["plotdata", str(tmp_path / "local-global.json"), "--columns", "m", "bound", "--output", str(target)]
        assert main(argv) == EXIT_PASS
        assert target.read_text(encoding="utf-8").startswith("m,bound\n1,3.0\n")

    def test_missing_file(self, tmp_path):
        assert main(["plotdata", str(tmp_path / "absent.json")]) == EXIT_IO

    def test_not_json(self, tmp_path):
        path = tmp_path / "report.json"
        path.write_text("not json", encoding="utf-8")
        assert main(["plotdata", str(path)]) == EXIT_PARSE


class TestSuites:
    def test_lists_every_suite(self, capsys):
        code, catalog = run_json(capsys, ["suites"])
        assert code == EXIT_PASS
        assert len(catalog) == 7
        assert catalog[0]["name"] == "gauss"

    def test_category(self, capsys):
        _, catalog = run_json(capsys, ["suites", "--category", "operators"])
        assert [entry["name"] for entry in catalog] == ["fourier", "weyl", "propagator"]

    def test_tags(self, capsys):
        _, catalog = run_json(capsys, ["suites", "--tag", "fft"])
        assert [entry["name"] for entry in catalog] == ["fourier"]
        _, catalog = run_json(capsys, ["suites", "--tag", "gauss", "--tag", "weyl"])
        assert [entry["name"] for entry in catalog] == ["gauss", "weyl"]
        _, catalog = run_json(capsys, ["suites", "--tag", "gauss", "--tag", "weyl", "--all-tags"])
        assert catalog == []

    def test_search(self, capsys):
        _, catalog = run_json(capsys, ["suites", "--search", "fourier"])
        assert [entry["name"] for entry in catalog] == ["fourier"]

    def test_index(self, capsys):
        _, index = run_json(capsys, ["suites", "--index"])
        assert index["categories"] == ["summation", "operators", "perturbation"]
        assert "fft" in index["tags"]

    def test_table_format(self, capsys):
        assert main(["suites", "--category", "perturbation", "--format", "table"]) == EXIT_PASS
        out = capsys.readouterr().out
        assert out.startswith("anharmonic: ")
        assert "--lambda-h" in out
