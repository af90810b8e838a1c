import json
import subprocess
import sys

import pytest

from quatbridge.cli import main

WORKED_E = '{"terms":[{"amp":[0,1,0,0],"k":[0,0,1]}]}'
WORKED_H = '{"terms":[{"amp":[0,0,1,0],"k":[0,0,1]}]}'


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_bridge_passes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "bridge")
    data = json.loads(out)
    assert code == 0
    assert data["summary"]["failed"] == 0 and data["summary"]["total"] > 0
    assert all(c["name"].startswith("bridge.") for c in data["checks"])


def test_verify_empty_suite_list(capsys):
    code, out, _ = run(capsys, "verify", "--suite")
    assert code == 0
    assert json.loads(out)["checks"] == []


def test_verify_projector_laws_off_relation(capsys, tmp_path):
    cfg = tmp_path / "k1.json"
    cfg.write_text(json.dumps({"kappa": [1, 0], "suites": ["projector-laws"]}))
    code, out, _ = run(capsys, "verify", "--config", str(cfg), "--format", "text")
    assert code == 1
    lines = {line.split()[1]: line.split()[0] for line in out.splitlines()[:-1]}
    assert lines["projector.idempotent_plus"] == "FAIL"
    assert lines["projector.complete"] == "PASS"


def test_verify_float_mode(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "dispersion", "projector-laws", "--mode", "float", "--tol", "1e-10")
    data = json.loads(out)
    assert code == 0
    assert {c["mode"] for c in data["checks"]} == {"float"}
    assert {c["tolerance"] for c in data["checks"]} == {1e-10}


def test_gamma_dump(capsys):
    code, out, _ = run(capsys, "gamma")
    data = json.loads(out)
    assert len(data["gammas"]["gammas"]) == 4
    assert data["report"]["conventions"]["clifford_sign"] == 1
    statuses = {c["name"]: c["status"] for c in data["report"]["checks"]}
    assert statuses["gamma.clifford"] == "pass"
    # Q equals -g1 g2 g3 for the reconstructed set, so this check reports a failure
    assert statuses["gamma.q_product"] == "fail" and code == 1


def test_transport_worked_example(capsys, tmp_path):
    cfg = tmp_path / "vac.json"
    cfg.write_text(json.dumps({"medium": {"omega": 1}, "dirac": {"energy": 1, "mass": 0}}))
    code, out, _ = run(capsys, "transport", "--config", str(cfg), "--E", WORKED_E, "--H", WORKED_H)
    data = json.loads(out)
    assert code == 0
    assert data["f"]["terms"] == [{"amp": [[-1, 0], [0, 0], [1, 0], [0, 0]], "k": [[0, 0], [0, 0], [1, 0]]}]


def test_transport_relation_violated(capsys, tmp_path):
    cfg = tmp_path / "vac.json"
    cfg.write_text(json.dumps({"medium": {"omega": 1}}))
    code, _, err = run(capsys, "transport", "--config", str(cfg), "--E", WORKED_E, "--H", WORKED_H)
    assert code == 2 and "differs from alpha^2" in err


def test_transport_invalid_fields(capsys):
    code, _, err = run(capsys, "transport", "--E", WORKED_E, "--H", WORKED_H)
    assert code == 2 and "do not solve the Maxwell system" in err


def test_dispersion_medium(capsys):
    code, out, _ = run(capsys, "dispersion", "--mode", "float", "--eps-r", "2")
    data = json.loads(out)
    assert code == 0
    assert abs(data["record"]["omega"][0] - 4 / 2 ** 0.5) < 1e-14


def test_dispersion_record_literal(capsys):
    record = '{"omega": 4, "kappa": 4, "energy": 5, "mass": 3, "momentum": 5}'
    code, out, _ = run(capsys, "dispersion", "--record", record, "--format", "text")
    assert code == 1 and "FAIL  dispersion.energy_momentum" in out


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "D*D + (d1*d1 + d2*d2 + d3*d3)", WORKED_E)
    data = json.loads(out)
    assert code == 0 and data["operator"] == "0" and data["residual_norms"] == [0.0] * 4
    code, out, _ = run(capsys, "eval", "D", WORKED_E, "--format", "text")
    assert "residual norms: [0.0, 0.0, 1.0, 0.0]" in out


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "eval", "D + * 3", WORKED_E)
    assert code == 2 and "position 4" in err


def test_bad_config_exit_code(capsys, tmp_path):
    cfg = tmp_path / "bad.json"
    cfg.write_text('{"mode": "fuzzy"}')
    code, _, err = run(capsys, "verify", "--config", str(cfg))
    assert code == 2 and "schema" in err


def test_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "--suite", "nope")
    assert code == 2 and "unknown suite" in err


def test_usage_errors():
    with pytest.raises(SystemExit):
        main(["verify", "--format", "xml"])


def _verify_bytes():
    cmd = [sys.executable, "-m", "quatbridge", "verify", "--suite", "algebra", "operators", "dirac"]
    return subprocess.run(cmd, capture_output=True, check=False).stdout


def test_reports_are_byte_deterministic():
    first, second = _verify_bytes(), _verify_bytes()
    assert first and first == second
