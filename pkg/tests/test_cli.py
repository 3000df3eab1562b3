"""CLI behaviour: determinism, exit codes, config validation."""

import json
import subprocess
import sys

import pytest

from bmlocal.cli import main

BM_CONFIG = {"field": {"p": 5, "e": 2, "f": 1}, "mu": [[2, 0], [2, 0]]}


def run_cli(tmp_path, command, config, extra=None):
    cfg = tmp_path / "config.json"
    cfg.write_text(json.dumps(config))
    out = tmp_path / "report.json"
    argv = [command, "--config", str(cfg), "--out", str(out)]
    if extra:
        argv += extra
    code = main(argv)
    return code, out.read_text()


def test_bm_identity_report(tmp_path):
    code, text = run_cli(tmp_path, "bm-identity", BM_CONFIG)
    assert code == 0
    report = json.loads(text)
    assert report["pass"]
    lams = {t["lambda"] for t in report["terms"]}
    assert lams == {"2,0", "1,1"}
    lifts = {t["lambda"]: t["lift"] for t in report["terms"]}
    assert sorted(lifts["2,0"].values()) == [[1, 0], [3, 0]]
    assert sorted(lifts["1,1"].values()) == [[1, 0], [2, 1]]


def test_reports_are_deterministic(tmp_path):
    _, first = run_cli(tmp_path, "bm-identity", BM_CONFIG)
    _, second = run_cli(tmp_path, "bm-identity", BM_CONFIG)
    assert first == second
    cfg = {"suite": "duality", "seed": 7}
    _, a = run_cli(tmp_path, "suite", cfg)
    _, b = run_cli(tmp_path, "suite", cfg)
    assert a == b


def test_unknown_config_key_rejected(tmp_path):
    bad = dict(BM_CONFIG, typo_key=1)
    with pytest.raises(ValueError):
        run_cli(tmp_path, "bm-identity", bad)


def test_failing_check_exits_nonzero(tmp_path):
    # outside the Theorem-A bound: a named error and exit code 1
    cfg = {"field": {"p": 5, "e": 2, "f": 1}, "mu": [[6, 0], [2, 0]]}
    code, text = run_cli(tmp_path, "bm-identity", cfg)
    assert code == 1
    report = json.loads(text)
    assert report["error"] == "BoundViolated"
    assert not report["pass"]


def test_decompose_command(tmp_path):
    cfg = {"weights": [[1, 0], [1, 0]]}
    code, text = run_cli(tmp_path, "decompose", cfg)
    assert code == 0
    report = json.loads(text)
    assert report["multiplicities"] == {"2,0": 1, "1,1": 1}


def test_nabla_cell_command(tmp_path):
    cfg = {"lambda": [3, 0], "e": 2, "p": 5}
    code, text = run_cli(tmp_path, "nabla-cell", cfg)
    assert code == 0
    report = json.loads(text)
    assert report["dimension"] == 2 == report["bruteforce"]
    assert report["free_exponents"] == [0, 2]


def test_interpolate_command(tmp_path):
    cfg = {
        "field": {"p": 5, "e": 2},
        "m": [1, 2, 3, 1, 2],
        "r": [2, 2],
        "precision": 40,
    }
    code, text = run_cli(tmp_path, "interpolate", cfg)
    assert code == 0
    report = json.loads(text)
    assert report["congruence"] and report["divisibility"]
    assert report["integrality"] and report["ledger_respected"]


def test_validate_bounds_command(tmp_path):
    code, text = run_cli(tmp_path, "validate-bounds", BM_CONFIG)
    assert code == 0
    report = json.loads(text)
    assert report["natural"]["pass"] and report["theoremA"]["pass"]


def test_suites_all_pass(tmp_path):
    for name in ("characters", "nabla", "duality"):
        code, _ = run_cli(tmp_path, "suite", {"suite": name, "seed": 0})
        assert code == 0, name


def test_console_entry_point(tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"weights": [[1, 0], [1, 0]]}))
    proc = subprocess.run(
        [sys.executable, "-m", "bmlocal.cli", "decompose", "--config", str(cfg)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["pass"]
