import json
import subprocess
import sys

import pytest

from awcenter import cli
from awcenter.checks import CheckResult
from awcenter.cli import SUITES, Check, Report, SuiteConfig, main, registered_checks, run
from awcenter.chebyshev import solve_capital
from awcenter.coeffring.multipoly import MultiPoly


def test_config_validation():
    with pytest.raises(ValueError):
        SuiteConfig(0)
    with pytest.raises(ValueError):
        SuiteConfig(3, ["nope"])
    with pytest.raises(ValueError):
        SuiteConfig(3, seed=2 ** 64)
    SuiteConfig(3, seed=2 ** 64 - 1)


@pytest.mark.parametrize("d", [2, 3, 5, 8])
def test_every_check_registered_once(d):
    checks = registered_checks(SuiteConfig(d))
    keys = [(c.suite, c.name) for c in checks]
    assert len(keys) == len(set(keys))
    assert {c.suite for c in checks} == set(SUITES)
    assert all(c.anchor for c in checks)


def test_d2_uqsl2_is_skipped():
    rep = run(SuiteConfig(2, ["uqsl2", "daha", "appendix"]))
    assert rep.records
    assert all(r.status == "skipped" for r in rep.records)
    assert not rep.failed


def test_d5_chebyshev_and_qidentities_pass():
    rep = run(SuiteConfig(5, ["chebyshev", "qidentities"]))
    assert [r.status for r in rep.records] == ["pass"] * len(rep.records)
    assert len(rep.records) == 10


def test_deterministic_apart_from_timing():
    cfg = SuiteConfig(4, ["qidentities", "uaw"], seed=17)
    a, b = run(cfg), run(cfg)
    assert a.without_timing() == b.without_timing()


def test_report_json_round_trip():
    rep = run(SuiteConfig(3, ["chebyshev"]))
    back = Report.from_json(json.loads(json.dumps(rep.to_json())))
    assert back == rep


def test_records_sorted():
    rep = run(SuiteConfig(3, ["qidentities", "chebyshev"]))
    keys = [(r.suite, r.check) for r in rep.records]
    assert keys == sorted(keys)


def _fake_registry(monkeypatch, result):
    def checks(cfg):
        return [Check("chebyshev", "fake", "always the given result", run=result)]
    monkeypatch.setitem(cli.REGISTRY, "chebyshev", checks)


def test_failing_check_sets_exit_code_and_payload(monkeypatch, capsys):
    _fake_registry(monkeypatch, lambda: CheckResult("fake", False, {"residual": [1, 2]}))
    assert main(["verify", "--d", "3", "--suite", "chebyshev"]) == 1
    out = capsys.readouterr().out
    assert "FAIL" in out and "residual" in out


def test_crashing_check_is_a_failure(monkeypatch):
    def boom():
        raise RuntimeError("kaboom")
    _fake_registry(monkeypatch, boom)
    rep = run(SuiteConfig(3, ["chebyshev"]))
    assert rep.failed
    assert "kaboom" in rep.records[0].payload["error"]


def test_passing_payload_is_empty(monkeypatch):
    _fake_registry(monkeypatch, lambda: CheckResult("fake", True, {"big": list(range(100))}))
    rep = run(SuiteConfig(3, ["chebyshev"]))
    assert rep.records[0].status == "pass" and rep.records[0].payload == {}


def test_verify_writes_json(tmp_path, capsys):
    path = tmp_path / "r.json"
    assert main(["verify", "--d", "3", "--suite", "chebyshev", "--json", str(path)]) == 0
    doc = json.loads(path.read_text())
    assert doc["config"]["d"] == 3
    assert {r["check"] for r in doc["records"]} >= {"composition_law", "listed_capital_polynomials"}
    assert "5 passed, 0 failed, 0 skipped" in capsys.readouterr().out


@pytest.mark.parametrize("argv", [
    ["verify", "--d", "0"],
    ["verify", "--d", "3", "--suite", "nope"],
    ["verify", "--d", "3", "--seed", "-1"],
    ["phi", "--n", "-2"],
    ["expand", "--alg", "sl3", "--d", "3", "--expr", "x"],
])
def test_bad_arguments_exit_2(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_phi_text(capsys):
    assert main(["phi", "--n", "1"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0].startswith("Phi_1 = ") and out[1].startswith("Psi_1 = ")


def test_phi_json(capsys):
    assert main(["phi", "--n", "2", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["n"] == 2
    Phi, Psi = solve_capital(2)
    assert MultiPoly.from_json(doc["Phi"]) == Phi
    assert MultiPoly.from_json(doc["Psi"]) == Psi


def test_expand_text_and_json(tmp_path, capsys):
    src = tmp_path / "x.txt"
    src.write_text("C*B - q^2*B*C")
    assert main(["expand", "--alg", "uaw", "--d", "5", "--expr", str(src), "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    again = tmp_path / "x.json"
    again.write_text(json.dumps(doc))
    assert main(["expand", "--alg", "uaw", "--d", "5", "--expr", str(again), "--json"]) == 0
    assert json.loads(capsys.readouterr().out) == doc
    assert main(["expand", "--alg", "uaw", "--d", "5", "--expr", str(src)]) == 0
    assert capsys.readouterr().out.strip()


def test_expand_errors(tmp_path, capsys):
    src = tmp_path / "bad.txt"
    src.write_text("A / B")
    assert main(["expand", "--alg", "uaw", "--d", "3", "--expr", str(src)]) == 2
    assert main(["expand", "--alg", "uaw", "--d", "3", "--expr", str(tmp_path / "missing")]) == 2
    assert "error" in capsys.readouterr().err


def test_console_script_entry_point():
    out = subprocess.run([sys.executable, "-m", "awcenter.cli", "phi", "--n", "0"], capture_output=True, text=True)
    assert out.returncode == 0
    assert "Phi_0 = 8" in out.stdout
