# -*- coding: utf-8 -*-
"""
cli_test.py
-----------
Test della CLI (click.testing.CliRunner): registro, sweep di verifica,
report JSON e codici di uscita.
"""
import dataclasses
import json
from fractions import Fraction

import pytest
from click.testing import CliRunner
from pydantic import ValidationError

from app.main import EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, cli
from app.schemas import VerifyReport
from identity_manager.exact import identity_suite


@pytest.fixture
def runner(tmp_path, monkeypatch):
    monkeypatch.setenv("LS_CONFIG_PATH", str(tmp_path / "missing.json"))
    for env in ("LS_N_MAX", "LS_JOBS", "LS_SEED"):
        monkeypatch.delenv(env, raising=False)
    return CliRunner()


def run(runner, *args):
    return runner.invoke(cli, ["--log-level", "ERROR", *args])


def test_list_prints_every_identity(runner):
    result = run(runner, "list")
    assert result.exit_code == EXIT_OK
    lines = result.stdout.strip().splitlines()
    # intestazione + separatore + una riga per identità
    assert len(lines) == 2 + 27


def test_list_filter(runner):
    result = run(runner, "list", "--filter", "gamma")
    assert "gamma_mu" in result.stdout
    assert "mu_half" not in result.stdout


def test_list_json(runner):
    result = run(runner, "list", "--format", "json")
    rows = json.loads(result.stdout)
    assert len(rows) == 27
    assert {"identity_id", "anchor", "params", "min_n", "guards"} <= set(rows[0])


def test_verify_alternating_zero_json(runner):
    result = run(runner, "verify", "--id", "alternating_zero", "--n-max", "5", "--format", "json")
    assert result.exit_code == EXIT_OK
    report = json.loads(result.stdout)
    assert set(report) >= {"run", "results", "summary"}
    assert len(report["results"]) == 5
    assert all(r["equal"] and r["lhs"] == "0/1" == r["rhs"] for r in report["results"])
    assert report["summary"] == {"pass": 5, "fail": 0, "skipped": 0}
    assert report["run"]["n_max"] == 5


def test_json_report_round_trips(runner):
    result = run(runner, "verify", "--id", "mu_half", "--id", "gamma_mu", "--n-max", "4", "--format", "json")
    assert result.exit_code == EXIT_OK
    text = result.stdout.strip()
    assert VerifyReport.model_validate_json(text).to_json() == text


def test_verify_log_moment_pairs(runner):
    result = run(runner, "verify", "--id", "log_moment", "--n-max", "4", "--format", "json")
    assert result.exit_code == EXIT_OK
    report = json.loads(result.stdout)
    pairs = sorted((int(r["params"]["m"]), r["n"]) for r in report["results"])
    assert pairs == [(0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 4)]
    assert report["summary"]["skipped"] == 10


def test_verify_explicit_grids(runner):
    result = run(runner, "verify", "--id", "main_theorem", "--x", "3/7", "--x=-4", "--n-max", "3",
                 "--format", "json", "--seed", "9")
    report = json.loads(result.stdout)
    assert result.exit_code == EXIT_OK
    assert report["run"]["seed"] == 9
    assert sorted({r["params"]["x"] for r in report["results"]}) == ["-4", "3/7"]


def test_verify_table_output(runner):
    result = run(runner, "verify", "--id", "arcsin_odd", "--n-max", "2")
    assert result.exit_code == EXIT_OK
    assert "arcsin_odd" in result.stdout
    # il caso n = 0 è riportato come escluso, con i valori informativi
    assert "5/8" in result.stdout and "1/8" in result.stdout


@pytest.mark.parametrize(
    "args",
    [
        ("verify", "--id", "unknown", "--n-max", "3"),
        ("verify", "--n-max", "3"),
        ("verify", "--id", "mu_half", "--n-max", "0"),
        ("verify", "--id", "mu_half", "--jobs", "0"),
        ("verify", "--id", "gamma_mu", "--mu=-1/2"),
        ("verify", "--id", "mu_half", "--format", "xml"),
    ],
)
def test_usage_errors(runner, args):
    assert run(runner, *args).exit_code == EXIT_USAGE


def test_mismatch_exit_code(runner, monkeypatch):
    broken = dataclasses.replace(identity_suite._REGISTRY["mu_half"], rhs=lambda case: Fraction(0))
    monkeypatch.setitem(identity_suite._REGISTRY, "mu_half", broken)
    result = run(runner, "verify", "--id", "mu_half", "--n-max", "3", "--format", "json")
    assert result.exit_code == EXIT_MISMATCH
    report = json.loads(result.stdout)
    assert report["summary"]["fail"] == 3


def test_internal_error_exit_code(runner, monkeypatch):
    def explode(*args, **kwargs):
        raise RuntimeError("boom")

    monkeypatch.setattr(identity_suite, "verify_cases", explode)
    result = run(runner, "verify", "--id", "mu_half", "--n-max", "3")
    assert result.exit_code == 3


@pytest.mark.parametrize(
    "args",
    [
        ("verify", "--id", "mu_half"),
        ("selfcheck", "--skip-float"),
        ("list",),
        ("show-config",),
    ],
)
def test_bad_env_override_is_usage_error(runner, monkeypatch, args):
    monkeypatch.setenv("LS_N_MAX", "abc")
    result = run(runner, *args)
    assert result.exit_code == EXIT_USAGE
    assert "LS_N_MAX" in result.stderr


@pytest.mark.parametrize("grids", [{"x_grid": ["abc"]}, {"mu_grid": ["-1/2"]}, {"mu_grid": ["n+q"]}])
def test_bad_config_grid_is_usage_error(runner, monkeypatch, tmp_path, grids):
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps(grids), encoding="utf-8")
    monkeypatch.setenv("LS_CONFIG_PATH", str(path))
    result = run(runner, "verify", "--id", "main_theorem", "--id", "gamma_mu", "--n-max", "3")
    assert result.exit_code == EXIT_USAGE


def test_config_grid_is_used(runner, monkeypatch, tmp_path):
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps({"x_grid": ["1/3"]}), encoding="utf-8")
    monkeypatch.setenv("LS_CONFIG_PATH", str(path))
    result = run(runner, "verify", "--id", "main_theorem", "--n-max", "3", "--format", "json")
    assert result.exit_code == EXIT_OK
    assert {r["params"]["x"] for r in json.loads(result.stdout)["results"]} == {"1/3"}


def test_report_rejects_inexact_values(runner):
    result = run(runner, "verify", "--id", "mu_half", "--n-max", "2", "--format", "json")
    report = json.loads(result.stdout)
    report["results"][0]["lhs"] = "0.5"
    with pytest.raises(ValidationError):
        VerifyReport.model_validate(report)


def test_show_config(runner, tmp_path):
    result = run(runner, "show-config")
    assert result.exit_code == EXIT_OK
    assert json.loads(result.stdout)["config_path"] == str(tmp_path / "missing.json")


@pytest.mark.slow
def test_selfcheck_exact_only(runner):
    result = run(runner, "selfcheck", "--skip-float", "--seed", "42", "--format", "json")
    assert result.exit_code == EXIT_OK
    report = json.loads(result.stdout)
    assert report["run"]["seed"] == 42
    assert "float_sanity" not in {s["name"] for s in report["suites"]}


@pytest.mark.slow
def test_verify_all(runner):
    result = run(runner, "verify", "--all", "--n-max", "40", "--jobs", "2")
    assert result.exit_code == EXIT_OK
