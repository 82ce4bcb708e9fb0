import io
import json
import os
import subprocess
import sys

import pytest

from conftest import ROOT
from itersocle.cli import run_command

GOLDEN = ROOT / "tests" / "golden" / "cli"

CASES = {
    "socle_fixture_all": ("socle problems/fixture.ideal --s 1 --method all", 0),
    "socle_fixture_s2_oracle": ("socle problems/fixture.ideal --s 2", 0),
    "reduction_m": ("verify reduction problems/m.ideal --s 1", 1),
    "resolve_ci23": ("resolve problems/ci23.ideal", 0),
    "resolve_fixture": ("resolve problems/fixture.ideal", 0),
    "dimension_fixture_s2": ("verify dimension problems/fixture.ideal --s 2", 0),
    "hb_delta_x2y2": ("hb problems/x2y2.hb --delta", 0),
    "hb_psi_x2y2": ("hb problems/x2y2.hb --psi", 0),
    "hb_minors_fixture": ("hb problems/fixture_phi2.hb --minors", 0),
    "lower_minors_structured": ("verify lower-minors problems/structured.matrix", 0),
    "ci_socle_ci23": ("ci-socle problems/ci23.ideal", 0),
}


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    cwd = os.getcwd()
    os.chdir(ROOT)
    try:
        code = run_command(argv, out, err)
    finally:
        os.chdir(cwd)
    return code, out.getvalue(), err.getvalue()


def reports(text):
    return [json.loads(line) for line in text.splitlines()]


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden_json(name):
    cmd, expected_code = CASES[name]
    code, out, _ = run(cmd.split() + ["--output", "json"])
    assert code == expected_code
    assert out == (GOLDEN / f"{name}.json").read_text()


def test_socle_all_fixture_values():
    code, out, _ = run("socle problems/fixture.ideal --s 1 --method all --output json".split())
    (r,) = reports(out)
    assert code == 0 and r["status"] == "PASS"
    assert r["payload"]["formula_count"] == 2
    assert r["payload"]["decomposition_agrees"] and r["payload"]["formula_agrees"]


def test_reduction_negative_control():
    code, out, _ = run("verify reduction problems/m.ideal --s 1 --output json".split())
    (r,) = reports(out)
    assert code == 1 and r["status"] == "FAIL" and r["witnesses"]


def test_resolve_values():
    _, out, _ = run("resolve problems/ci23.ideal --output json".split())
    (r,) = reports(out)
    assert r["payload"]["betti"] == [1, 2, 1] and r["payload"]["order_last_map"] == 2
    _, out, _ = run("resolve problems/fixture.ideal --output json".split())
    (r,) = reports(out)
    assert r["payload"]["betti"] == [1, 3, 2] and r["payload"]["order_last_map"] == 2


def test_out_of_range_is_computed():
    code, out, _ = run("socle problems/fixture.ideal --s 3 --method all --output json".split())
    (r,) = reports(out)
    assert code == 0 and r["status"] == "COMPUTED"
    assert r["payload"]["in_range"] is False


def test_text_output_default():
    code, out, _ = run("ci-socle problems/ci23.ideal".split())
    assert code == 0 and out.startswith("ci_socle: PASS")


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        ["socle", "problems/fixture.ideal", "--s", "1", "--frobnicate"],
        ["socle", "problems/fixture.ideal"],
        ["socle", "problems/bad.ideal", "--s", "1"],
        ["socle", "problems/does-not-exist.ideal", "--s", "1"],
        ["hb", "problems/fixture.ideal", "--s", "1", "--delta"],
        ["hb", "problems/x2y2.hb", "--s", "3", "--delta"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    code, _, err = run(argv)
    assert code == 2
    captured = capsys.readouterr()
    assert err or captured.err


def test_parse_error_message_has_position():
    _, _, err = run(["socle", "problems/bad.ideal", "--s", "1"])
    assert "line 3, column 7" in err


def test_lower_minor_hypothesis_failure_is_error():
    code, out, _ = run("verify lower-minors problems/structured.matrix --n 2 --s 3 --output json".split())
    (r,) = reports(out)
    assert code == 2 and r["status"] == "ERROR" and "violated" in r["payload"]


def test_suite_command_with_seed():
    code, out, _ = run("suite ci --seed 5 --output json".split())
    (r,) = reports(out)
    assert code == 0 and r["claim"] == "ci_socle" and r["payload"]["seed"] == 5


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "itersocle.cli", "ci-socle", "problems/ci23.ideal", "--output", "json"],
        cwd=ROOT, capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["status"] == "PASS"
