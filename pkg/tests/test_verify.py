import dataclasses

import numpy as np
import pytest

from factories import CheckFactory
from matlin import GbdtError
from seed import SystemKind
from verify import (
    BaseCheck,
    CheckPlan,
    CheckStatus,
    DiracSystem,
    VerifyReport,
    check_dual_ode,
    check_identity,
    check_pispluss,
    check_positivity,
    parse_report_line,
    report_lines,
    rk4_integrate,
    run_checks,
)

X_GRID = [float(x) for x in np.linspace(-1.0, 1.0, 11)]


def _domain(triple):
    return [x for x in X_GRID if x >= 0] if triple.kind.is_self_adjoint else X_GRID


def test_identity_holds(canned_triple):
    report = check_identity(canned_triple, _domain(canned_triple))
    assert report.passed, report.to_line()


def test_dual_equations_hold(canned_triple):
    report = check_dual_ode(canned_triple, _domain(canned_triple))
    assert report.passed, report.to_line()


def test_pi_s_inverse_equation_holds(canned_triple):
    report = check_pispluss(canned_triple, _domain(canned_triple)[::2])
    assert report.passed, report.to_line()


@pytest.mark.parametrize("triple_name", ["ee_dw0_triple", "ee_dw1_triple", "trivial_ssa_triple"])
def test_positivity_and_monitors(triple_name, request):
    triple = request.getfixturevalue(triple_name)
    report = check_positivity(triple, X_GRID)
    assert report.passed, report.to_line()
    assert report.details["min_eig_overall"] > 0


def test_identity_detects_perturbed_s0(ee_dw0_triple):
    broken = dataclasses.replace(ee_dw0_triple, S0=np.array(ee_dw0_triple.S0) + 1e-3)
    report = check_identity(broken, X_GRID)
    assert not report.passed
    assert report.worst_residual > 1e-4


def test_full_battery_on_scalar_example(ee_dw0_triple):
    plan = CheckPlan.default_for(ee_dw0_triple)
    plan.z_list = (5j,)
    checks = CheckFactory().create_all()
    reports = run_checks(checks, ee_dw0_triple, plan)
    ids = [report.check_id for report in reports]
    # the self-adjoint-only Herglotz check is skipped
    assert "check_herglotz" not in ids and len(ids) == 8
    for report in reports:
        assert report.passed, report.to_line()


def test_herglotz_battery_on_self_adjoint_triple(sa_scalar_triple):
    plan = CheckPlan.default_for(sa_scalar_triple)
    checks = CheckFactory().create_all(["herglotz", "weyl_routes"])
    reports = run_checks(checks, sa_scalar_triple, plan)
    assert [report.check_id for report in reports] == ["check_herglotz", "check_weyl_routes"]
    assert all(report.passed for report in reports)


def _free_system(kind, z):
    return DiracSystem(kind=kind, potential=lambda x: np.zeros((2, 2), dtype=complex), z=z)


def _free_solution(z, x):
    return np.diag([np.exp(1j * z * x), np.exp(-1j * z * x)])


def test_rk4_free_system_matches_exact():
    z = 2.0 + 0.5j
    track = rk4_integrate(_free_system(SystemKind.self_adjoint(), z), np.eye(2), [0.0, 1.0, 2.0])
    for index, x in enumerate((0.0, 1.0, 2.0)):
        assert np.allclose(track[index], _free_solution(z, x), rtol=0, atol=1e-9)


def test_rk4_self_convergence():
    z = 2.0 + 0.5j
    system = _free_system(SystemKind.self_adjoint(), z)
    exact = _free_solution(z, 1.0)
    coarse = np.abs(rk4_integrate(system, np.eye(2), [0.0, 1.0], step=0.1)[-1] - exact).max()
    fine = np.abs(rk4_integrate(system, np.eye(2), [0.0, 1.0], step=0.05)[-1] - exact).max()
    assert coarse / fine >= 8.0


def test_rk4_caches_potential_per_system():
    calls = []

    def potential(x):
        calls.append(x)
        return np.zeros((2, 2))

    system = DiracSystem(kind=SystemKind.skew(), potential=potential, z=1j)
    rk4_integrate(system, np.eye(2), [0.0, 0.1], step=0.05)
    assert len(calls) == len(set(calls))


def test_report_line_round_trip():
    report = VerifyReport("check_identity", "x[-1,1]x11", 2.5e-12, 1e-9, "x=0.2")
    fields = parse_report_line(report.to_line())
    assert fields["check_id"] == "check_identity"
    assert float(fields["worst"]) == 2.5e-12
    assert float(fields["threshold"]) == 1e-9
    assert fields["pass"] == "true"
    assert fields["location"] == "x=0.2"
    failing = VerifyReport("check_pde", "grid", 1.0, 1e-5, "x=1 , xi=0")
    assert report_lines([report, failing])[1].split(" ")[3] == "pass=false"
    assert parse_report_line(failing.to_line())["location"] == "x=1,xi=0"


def test_check_factory():
    factory = CheckFactory()
    assert len(factory.get_supported_checks()) == 9
    assert factory.create_check("membership").check_id == "check_weyl_membership"
    assert factory.create_check("CHECK_PDE").check_id == "check_pde"
    assert factory.create_check("bogus") is None
    with pytest.raises(KeyError):
        factory.create_all(["identity", "bogus"])


class _ExplodingCheck(BaseCheck):
    check_id = "check_identity"

    def execute(self, triple, plan):
        raise GbdtError("boom")


def test_engine_error_becomes_failing_report(ee_dw0_triple):
    seen = []
    check = _ExplodingCheck()
    check.set_status_callback(lambda check_id, status, message: seen.append(status))
    report = check.execute_with_status(ee_dw0_triple, CheckPlan.default_for(ee_dw0_triple))
    assert not report.passed
    assert report.location == "error:GbdtError"
    assert seen == [CheckStatus.RUNNING, CheckStatus.ERROR]


def test_every_check_has_a_threshold():
    from config_package import Tolerances

    thresholds = Tolerances.get_all_thresholds()
    assert set(CheckFactory().get_supported_checks()) <= set(thresholds)
    thresholds["check_identity"] = 1.0
    assert Tolerances.get_threshold("check_identity") == 1e-9
    with pytest.raises(KeyError):
        Tolerances.get_threshold("check_unknown")


def test_positivity_fails_on_singular_s(trivial_sa_triple, monkeypatch):
    from verify import checks

    monkeypatch.setattr(checks, "eval_s", lambda triple, x: np.zeros((1, 1), dtype=complex))
    report = check_positivity(trivial_sa_triple, [0.0, 0.5])
    assert not report.passed
    assert report.details["min_eig_overall"] == 0.0
