# tests/test_verifier_cli.py
from __future__ import annotations

import json

import pytest

from superal.cli.suites import SUITES, cmd_check_suite
from superal.cli.verifier_cli import RunConfig, emit_report, main
from superal.core.errors import UnknownSuiteError
from superal.core.json_safety import load_report, try_parse_and_validate
from superal.core.schemas import VerificationReport
from superal.identities.superpoly import verify_al

pytestmark = pytest.mark.offline


def test_verify_al_prints_a_json_report(capsys):
    assert main(["verify-al", "--n", "1"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["status"] == "verified"
    assert data["mode"] == "exact"
    assert data["tuples_checked"] == "44"
    assert "elapsed_s" not in data


def test_report_bytes_are_deterministic():
    a = emit_report(verify_al(1, "exact"))
    b = emit_report(verify_al(1, "exact"))
    assert a == b
    assert emit_report(verify_al(1, "exact"), include_timing=True) != a


def test_text_report(capsys):
    assert main(["verify-al", "--n", "1", "--mode", "modular", "--format", "text"]) == 0
    out = capsys.readouterr().out
    assert "status:   verified" in out
    assert f"primes:   {(1 << 61) - 1}" in out


def test_report_written_to_file(tmp_path, capsys):
    out = tmp_path / "reports" / "n1.json"
    assert main(["verify-al", "--n", "1", "--mode", "random", "--samples", "10", "--seed", "4", "--out", str(out)]) == 0
    assert capsys.readouterr().out == ""
    data = json.loads(out.read_text(encoding="utf-8"))
    assert data["seed"] == "4"
    assert data["tuples_checked"] == "10"
    report = load_report(out)
    assert report.verified and report.mode == "random" and report.seed == 4


def test_small_prime_aborts_unless_fallback_is_allowed(capsys):
    assert main(["verify-al", "--n", "1", "--mode", "modular", "--prime", "101"]) == 2
    assert "error:" in capsys.readouterr().err
    assert main(["verify-al", "--n", "1", "--mode", "modular", "--prime", "101", "--allow-fallback"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["mode"] == "exact"
    assert "fallback-exact" in data["parameters"]["notes"]


def test_invalid_run_config_exits_with_usage_error():
    assert main(["verify-al", "--n", "0"]) == 2
    with pytest.raises(ValueError):
        RunConfig(n=1, unknown=True)


def test_unknown_suite(capsys):
    assert main(["check", "--suite", "nope"]) == 2
    with pytest.raises(UnknownSuiteError):
        cmd_check_suite("nope")


def test_counterexample_suite(capsys):
    assert main(["check", "--suite", "counterexample"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["mode"] == "suite"
    assert all(data["checks"].values())
    assert "A8_value" in data["parameters"]


@pytest.mark.slow
@pytest.mark.parametrize("suite", sorted(SUITES))
def test_every_suite_passes(suite):
    report = cmd_check_suite(suite, seed=1)
    assert report.verified, [w.note for w in report.failures]


def test_basis_dump(capsys):
    assert main(["basis", "--algebra", "osp", "--n", "1", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["dimension"] == "5"
    assert main(["basis", "--algebra", "gl", "--p", "1", "--q", "2"]) == 0
    assert "gl(1,2)" in capsys.readouterr().out


def test_counterexample_command(capsys):
    assert main(["counterexample", "--p", "1", "--q", "1", "--k", "6"]) == 0
    assert "equals 6! X^6: True" in capsys.readouterr().out


def test_falsified_report_carries_a_witness(faulty_osp):
    report = verify_al(1, "exact", algebra=faulty_osp)
    data = json.loads(emit_report(report))
    assert data["status"] == "falsified"
    witness = data["failures"][0]
    assert len(witness["indices"]) == 6
    assert any(entry != "0" for row in witness["value"] for entry in row)


def test_report_json_round_trips_through_the_schema():
    report = verify_al(1, "modular")
    inst, err = try_parse_and_validate(VerificationReport, emit_report(report).decode("utf-8"))
    assert err is None
    assert inst.model_dump(exclude={"elapsed_s"}) == report.model_dump(exclude={"elapsed_s"})
    _, err = try_parse_and_validate(VerificationReport, "{")
    assert err.startswith("JSON parse error")
    _, err = try_parse_and_validate(VerificationReport, json.dumps({"claim": "x", "mode": "exact", "extra": 1}))
    assert err.startswith("Validation error")


def test_metrics_callback_writes_jsonl(tmp_path, monkeypatch, capsys):
    path = tmp_path / "metrics.jsonl"
    monkeypatch.setenv("METRICS_JSON", str(path))
    assert main(["verify-al", "--n", "1"]) == 0
    events = [json.loads(line)["event"] for line in path.read_text(encoding="utf-8").splitlines()]
    assert events[0] == "verify_al_start"
    assert events[-1] == "verify_al_end"
    assert "chunk" in events


def test_chunk_events_carry_progress_counts(tmp_path, monkeypatch):
    from superal.metrics.cb import build_metrics_cb

    path = tmp_path / "m" / "events.jsonl"
    monkeypatch.setenv("METRICS_JSON", str(path))
    cb = build_metrics_cb()
    cb("chunk", {"index": 0, "checked": 44, "nonzero": 0})
    cb({"checked": 1})
    cb(event="verify_al_end", payload={"status": "verified"})
    rows = [json.loads(line) for line in path.read_text(encoding="utf-8").splitlines()]
    assert [r["event"] for r in rows] == ["chunk", "event", "verify_al_end"]
    assert rows[0]["checked"] == 44 and rows[2]["status"] == "verified"


def test_suite_reports_echo_sample_counts():
    from superal.cli import suites

    assert (suites.LAMBDA_SAMPLES, suites.COHOMOLOGY_FORMS, suites.DERIVATION_PAIRS) == (200, 50, 50)
    assert (suites.BASIS_CHANGES, suites.OSP12_MEMBERSHIP, suites.OSP14_MEMBERSHIP) == (20, 100, 20)


@pytest.mark.slow
def test_suite_parameters_record_counts():
    cohomology = cmd_check_suite("cohomology", seed=2)
    assert cohomology.parameters["forms"] == "50"
    assert cohomology.parameters["derivation_pairs"] == "50"
    assert cohomology.parameters["basis_changes"] == "20"
    membership = cmd_check_suite("membership", seed=2)
    assert membership.parameters == {"samples_osp12": "100", "samples_osp14": "20"}
    assert membership.tuples_checked == 560
    sharpness = cmd_check_suite("sharpness", seed=2)
    assert sharpness.checks["A9_nonzero_n2"]
