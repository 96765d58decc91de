import json
import subprocess
import sys
from collections import Counter

import pytest

from agcert.cli import SCENARIOS
from agcert.cli.__main__ import main
from agcert.cli.registry import ScenarioError, load_builtin, run_scenario, scenario_from_dict

QUICK = ["weighted-bezout-m48", "p138-invariants", "orbifold-W", "quotient-invariants-s2"]


def test_list(capsys):
    assert main(["list"]) == 0
    ids = capsys.readouterr().out.split()
    assert len(ids) == 14 and ids == list(SCENARIOS)


def test_describe_marks_optional(capsys):
    assert main(["describe", "mirror24"]) == 0
    out = capsys.readouterr().out
    assert "census" in out and "(optional)" in out
    assert main(["describe", "conics"]) == 0
    assert "[reference]" in capsys.readouterr().out


def test_unknown_id_is_input_error(capsys):
    assert main(["verify", "no-such-scenario"]) == 2
    assert main(["describe", "no-such-scenario"]) == 2
    assert main(["verify"]) == 2
    assert main(["frobnicate"]) == 2


@pytest.mark.parametrize("sid", SCENARIOS)
def test_every_expected_value_checked_once(sid):
    sc = load_builtin(sid)
    cert = run_scenario(sc)
    counts = Counter(c.name for c in cert.checks)
    assert set(counts) == set(sc.expected)
    assert all(v == 1 for v in counts.values())
    assert cert.passed
    assert cert.passed == all(c.passed or (c.optional and c.status == "indeterminate") for c in cert.checks)


@pytest.mark.parametrize("sid", QUICK + ["quartic", "sd16"])
def test_certificates_deterministic(sid):
    a = run_scenario(load_builtin(sid)).to_json(timings=False)
    b = run_scenario(load_builtin(sid)).to_json(timings=False)
    assert a == b
    assert json.loads(a)["scenario"] == sid


def test_file_override_changes_outcome(tmp_path, capsys):
    path = tmp_path / "wb.json"
    data = json.loads(load_builtin_json("weighted-bezout-m48"))
    assert main(["verify", "--file", str(write(path, data))]) == 0
    data["expected"][0]["value"] = 25
    out = tmp_path / "cert.json"
    assert main(["verify", "--file", str(write(path, data)), "--out", str(out)]) == 1
    cert = json.loads(out.read_text())
    assert cert["pass"] is False
    bad = [c for c in cert["checks"] if c["status"] != "pass"]
    assert [c["name"] for c in bad] == ["M48_square"]


def test_bad_files_exit_2(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    assert main(["verify", "--file", str(p)]) == 2
    data = json.loads(load_builtin_json("weighted-bezout-m48"))
    data["expected"][0]["provenance"] = "guess"
    assert main(["verify", "--file", str(write(p, data))]) == 2
    data = json.loads(load_builtin_json("quartic"))
    data["inputs"]["quartic"] = "x^2 +* y"
    assert main(["verify", "--file", str(write(p, data))]) == 2
    assert main(["verify", "--file", str(tmp_path / "missing.json")]) == 2


def test_scenario_from_dict_validation():
    with pytest.raises(ScenarioError):
        scenario_from_dict({"expected": []})
    dup = {"id": "x", "expected": [{"name": "a", "value": 1, "provenance": "trivial"}] * 2}
    with pytest.raises(ScenarioError):
        scenario_from_dict(dup)


def test_budget_exhaustion_is_indeterminate(capsys):
    assert main(["verify", "triple-root-criterion", "--budget-pairs", "1"]) == 1
    assert "indeterminate" in capsys.readouterr().out


def test_long_run_needs_opt_in(capsys):
    assert main(["long-run"]) == 2
    assert "--yes" in capsys.readouterr().err


def test_long_run_tiny_budget_is_indeterminate(capsys):
    assert main(["long-run", "--yes", "--budget-seconds", "0.5"]) == 1
    out = capsys.readouterr().out
    assert "indeterminate" in out and out.count("budget exhausted") == 9


def test_long_run_subcase(tmp_path, capsys):
    out = tmp_path / "lr.json"
    assert main(["long-run", "--yes", "--subcase", "--out", str(out)]) == 0
    cert = json.loads(out.read_text())
    assert {c["name"]: c["status"] for c in cert["checks"]} == {
        "subcase_eliminant_has_a_minus_8": "pass",
        "subcase_a_minus_8": "pass",
        "subcase_control_a_minus_4": "pass",
    }


def test_falsify_custom_samples(capsys):
    assert main(["falsify-pencil", "--samples=-4,3"]) == 0
    assert "PASS falsify-pencil" in capsys.readouterr().out


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "agcert.cli", "list"], capture_output=True, text=True)
    assert r.returncode == 0 and len(r.stdout.split()) == 14


def load_builtin_json(sid):
    from importlib import resources

    return resources.files("agcert.cli").joinpath("data", f"{sid}.json").read_text()


def write(path, data):
    path.write_text(json.dumps(data))
    return path
