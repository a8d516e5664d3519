import argparse
import dataclasses
import os

import numpy as np
import pytest

from main import main, parse_complex
from tools.artifacts import read_csv_table
from tools.scenario.catalog import ee_dw0, ee_dw1, trivial_sa
from verify import VerifyReport
from workflow import EXIT_CHECK_FAILED, EXIT_ERROR, EXIT_OK, ScenarioWorkflow, exit_code, failing_reports

SCENARIO_YAML = """\
name: sa-file
kind: self_adjoint
seed: {a: 1, c: 0}
A: [[[0, 1]]]
f1: [[0.1]]
f2: [[1]]
grids:
  x: {start: 0, stop: 1, count: 11}
outputs: [profile, verify]
checks: [identity, dual_ode]
"""


def _only(scenario, *outputs):
    return dataclasses.replace(scenario, outputs=tuple(outputs))


def _read(folder, name):
    return read_csv_table(os.path.join(folder, name))


def test_scalar_profile(tmp_path):
    results = ScenarioWorkflow(output_dir=str(tmp_path)).run_scenario(_only(ee_dw0(), "profile"))
    assert results["workflow_status"] == "completed"
    table = _read(results["output_folder"], "profile.csv")
    xs = [float(x) for x in table["x"]]
    assert len(xs) == 101
    origin = min(range(len(xs)), key=lambda i: abs(xs[i]))
    assert abs(float(table["omega"][origin]) + 2.2) <= 1e-9
    for omega, closed in zip(table["omega"], table["omega_closed"]):
        assert abs(float(omega) - float(closed)) <= 1e-9
    asymptotics = _read(results["output_folder"], "asymptotics.csv")
    assert all(float(gap) <= 1e-4 for gap in asymptotics["gap"])


def test_profile_header_lists_parameters(tmp_path):
    results = ScenarioWorkflow(output_dir=str(tmp_path)).run_scenario(_only(ee_dw0(), "profile"))
    with open(os.path.join(results["output_folder"], "profile.csv"), encoding="utf-8") as f:
        header = [line for line in f if line.startswith("#")]
    assert any("kind: skew_self_adjoint" in line for line in header)
    assert any("lambda: 2.0" in line for line in header)


def test_jordan_profile_closed_forms(tmp_path):
    results = ScenarioWorkflow(output_dir=str(tmp_path)).run_scenario(_only(ee_dw1(), "profile"))
    table = _read(results["output_folder"], "profile.csv")
    for got, closed in zip(table["re_s_22"], table["s22_closed"]):
        assert abs(float(got) - float(closed)) <= 1e-8 * abs(float(closed))
    asymptotics = _read(results["output_folder"], "asymptotics.csv")
    far = [float(gap) for x, gap in zip(asymptotics["x"], asymptotics["omega_minus_r"]) if float(x) >= 10]
    assert far and max(abs(v) for v in far) <= 1e-6


def test_runs_are_byte_identical(tmp_path):
    scenario = _only(ee_dw0(), "profile", "dynamical")
    first = ScenarioWorkflow(output_dir=str(tmp_path / "a")).run_scenario(scenario)
    second = ScenarioWorkflow(output_dir=str(tmp_path / "b")).run_scenario(scenario)
    for name in ("profile.csv", "dynamical.csv", "asymptotics.csv", "run_summary.md"):
        with open(os.path.join(first["output_folder"], name), "rb") as f:
            one = f.read()
        with open(os.path.join(second["output_folder"], name), "rb") as f:
            two = f.read()
        assert one == two, name
        assert b"\r\n" not in one


def test_trivial_weyl_has_unit_modulus(tmp_path):
    results = ScenarioWorkflow(output_dir=str(tmp_path)).run_scenario(_only(trivial_sa(), "weyl", "profile"))
    weyl = _read(results["output_folder"], "weyl.csv")
    assert len(weyl["abs_phi_11"]) == 5
    assert all(abs(float(v) - 1.0) <= 1e-12 for v in weyl["abs_phi_11"])
    profile = _read(results["output_folder"], "profile.csv")
    assert all(float(v) == 1.0 for v in profile["re_v_11"])
    assert "omega" not in profile


def test_weyl_command_uses_given_points(tmp_path):
    results = ScenarioWorkflow(output_dir=str(tmp_path)).weyl(trivial_sa(), [2j])
    weyl = _read(results["output_folder"], "weyl.csv")
    assert weyl["im_z"] == ["2.0"]


def test_wrong_supplied_s0_stops_at_assembly(tmp_path, ee_dw0_triple):
    scenario = dataclasses.replace(_only(ee_dw0(), "weyl"), S0=-ee_dw0_triple.S0)
    results = ScenarioWorkflow(output_dir=str(tmp_path)).run_scenario(scenario)
    assert [step["step"] for step in results["steps"]] == ["assemble_triple"]
    assert results["workflow_status"] == "error"
    assert exit_code(results) == EXIT_ERROR
    assert os.path.exists(os.path.join(results["output_folder"], "run_summary.md"))


def test_weyl_skipped_without_positive_s0(tmp_path):
    # eigenvalue in the lower half-plane gives S(0) < 0
    scenario = dataclasses.replace(_only(ee_dw0(), "weyl"), A=np.array([[-2j]]))
    results = ScenarioWorkflow(output_dir=str(tmp_path)).run_scenario(scenario)
    assert results["steps"][-1]["step"] == "weyl"
    assert results["steps"][-1]["status"] == "skipped"
    assert results["workflow_status"] == "completed"


def test_status_callback_sees_steps(tmp_path):
    seen = []
    workflow = ScenarioWorkflow(output_dir=str(tmp_path))
    workflow.set_status_callback(lambda workflow_status, message, current_step: seen.append(current_step))
    workflow.run_scenario(_only(trivial_sa(), "profile"))
    assert "assemble_triple" in seen and "profile" in seen


def test_exit_codes():
    ok = VerifyReport("check_identity", "g", 0.0, 1e-9, "x=0")
    bad = VerifyReport("check_pde", "g", 1.0, 1e-5, "x=0")
    assert exit_code({"workflow_status": "completed", "reports": [ok]}) == EXIT_OK
    assert exit_code({"workflow_status": "failed", "reports": [ok, bad]}) == EXIT_CHECK_FAILED
    assert exit_code({"workflow_status": "error", "reports": []}) == EXIT_ERROR
    assert failing_reports({"reports": [ok, bad]}) == [bad]


def test_main_runs_scenario_file(tmp_path, capsys):
    path = tmp_path / "sa.yaml"
    path.write_text(SCENARIO_YAML, encoding="utf-8")
    out = tmp_path / "out"
    assert main(["--output-dir", str(out), "run", str(path)]) == EXIT_OK
    report = (out / "sa-file" / "verify_report.txt").read_text(encoding="utf-8").splitlines()
    assert [line.split(" ")[0] for line in report] == ["check_id=check_identity", "check_id=check_dual_ode"]
    assert "COMPLETED" in capsys.readouterr().out


def test_main_reports_bad_scenario(tmp_path):
    path = tmp_path / "bad.yaml"
    path.write_text(SCENARIO_YAML.replace("self_adjoint", "unknown"), encoding="utf-8")
    assert main(["--output-dir", str(tmp_path), "run", str(path)]) == EXIT_ERROR
    assert main(["--output-dir", str(tmp_path), "verify", str(tmp_path / "missing.yaml")]) == EXIT_ERROR


def test_parse_complex():
    assert parse_complex("0,5") == 5j
    assert parse_complex("-1.5,2") == complex(-1.5, 2.0)
    with pytest.raises(argparse.ArgumentTypeError):
        parse_complex("5j")


def test_check_status_callback_sees_each_check(tmp_path):
    seen = []
    workflow = ScenarioWorkflow(output_dir=str(tmp_path))
    workflow.set_check_status_callback(lambda check_id, status, message: seen.append((check_id, status)))
    scenario = dataclasses.replace(_only(ee_dw0(), "verify"), checks=("identity",))
    workflow.run_scenario(scenario)
    assert seen[0] == ("check_identity", "running")
    assert seen[-1][0] == "check_identity" and seen[-1][1] == "success"
