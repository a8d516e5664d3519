from typing import Any, Callable, Dict, List, Optional, Sequence
import logging
import os

from config_package import GBDT_OUTPUT_DIR
from factories import CheckFactory
from matlin import GbdtError
from seed import GbdtTriple
from tools.artifacts import (
    ArtifactWriter,
    asymptotics_table,
    dynamical_table,
    profile_table,
    render_csv_header,
    render_run_summary,
    weyl_ready,
    weyl_table,
)
from tools.scenario import Scenario, get_example
from verify import CheckPlan, VerifyReport, format_float, report_lines, run_checks

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_ERROR = 2


class ScenarioWorkflow:
    """Runs a scenario through triple assembly, tables and verification.

    Each step records a result dict; an engine error stops the step, not the
    run, and is reported in the summary.
    """

    def __init__(self, output_dir: Optional[str] = None, check_factory: Optional[CheckFactory] = None):
        self.output_root = output_dir or GBDT_OUTPUT_DIR
        self.check_factory = check_factory or CheckFactory()
        self.output_folder = None
        self.status_callback = None
        self.check_status_callback = None

    def set_status_callback(self, callback):
        """Set callback for workflow status updates"""
        self.status_callback = callback

    def set_check_status_callback(self, callback):
        """Set callback for individual check updates"""
        self.check_status_callback = callback

    def _notify_workflow_status(self, status: str, message: str = "", step: str = None):
        if self.status_callback:
            try:
                self.status_callback(workflow_status=status, message=message, current_step=step)
            except Exception as e:
                logger.warning(f"❌ Error in workflow status callback: {str(e)}")

    def _create_output_folder(self, name: str) -> str:
        """One folder per scenario name; no timestamps so reruns overwrite identically"""
        output_path = os.path.join(self.output_root, name)
        os.makedirs(output_path, exist_ok=True)
        return output_path

    def _header(self, table: str, scenario: Scenario, triple: GbdtTriple) -> str:
        return render_csv_header(table, scenario.name, triple.kind.label, triple.p, triple.n, scenario.parameters)

    def _run_step(self, results: Dict[str, Any], name: str, action: Callable[[], List[str]]) -> bool:
        """Execute one step; GbdtError is recorded, anything else propagates"""
        self._notify_workflow_status("running", f"Executing {name}", step=name)
        logger.info(f"--- {name} ---")
        step = {"step": name, "status": "success", "error": None, "files": []}
        try:
            step["files"] = action() or []
            logger.info(f"✅ {name} completed")
        except GbdtError as e:
            step["status"] = "error"
            step["error"] = str(e)
            logger.error(f"❌ {name} failed: {e}")
        results["steps"].append(step)
        results["saved_files"].extend(step["files"])
        return step["status"] == "success"

    def _skip_step(self, results: Dict[str, Any], name: str, reason: str) -> None:
        logger.info(f"⏭️ {name} skipped: {reason}")
        results["steps"].append({"step": name, "status": "skipped", "error": reason, "files": []})

    def _new_results(self, scenario: Scenario, command: str) -> Dict[str, Any]:
        self.output_folder = self._create_output_folder(scenario.name)
        return {
            "scenario": scenario.name,
            "command": command,
            "steps": [],
            "reports": [],
            "saved_files": [],
            "workflow_status": "in_progress",
            "output_folder": self.output_folder,
            "triple": None,
        }

    def _assemble(self, results: Dict[str, Any], scenario: Scenario) -> Optional[GbdtTriple]:
        def action():
            results["triple"] = scenario.build_triple()
            return []

        self._run_step(results, "assemble_triple", action)
        return results["triple"]

    def _write_profile(self, results, scenario, triple, writer):
        def action():
            files = [writer.write_table(profile_table(triple, scenario), self._header("profile", scenario, triple))]
            table = asymptotics_table(triple, scenario)
            if table is not None:
                files.append(writer.write_table(table, self._header("asymptotics", scenario, triple)))
            return files

        self._run_step(results, "profile", action)

    def _write_weyl(self, results, scenario, triple, writer, z_list: Optional[Sequence[complex]] = None):
        if not weyl_ready(triple):
            self._skip_step(results, "weyl", "S(0) is not positive")
            return
        z_list = list(z_list) if z_list else list(scenario.grids.z)

        def action():
            table = weyl_table(triple, z_list)
            return [writer.write_table(table, self._header("weyl", scenario, triple))]

        self._run_step(results, "weyl", action)

    def _write_dynamical(self, results, scenario, triple, writer):
        def action():
            table = dynamical_table(triple, scenario)
            return [writer.write_table(table, self._header("dynamical", scenario, triple))]

        self._run_step(results, "dynamical", action)

    def plan_for(self, scenario: Scenario, triple: GbdtTriple) -> CheckPlan:
        plan = CheckPlan.default_for(triple)
        plan.x_grid = scenario.grids.x.points()
        plan.xi_grid = scenario.grids.xi.points()
        if scenario.grids.z:
            plan.z_list = tuple(scenario.grids.z)
        return plan

    def _verify(self, results, scenario, triple, writer):
        def action():
            checks = self.check_factory.create_all(list(scenario.checks) or None)
            for check in checks:
                check.set_status_callback(self.check_status_callback)
            reports = run_checks(checks, triple, self.plan_for(scenario, triple))
            results["reports"].extend(reports)
            return [writer.write_text("verify_report.txt", "\n".join(report_lines(reports)) + "\n")]

        self._run_step(results, "verify", action)

    def _finish(self, results: Dict[str, Any]) -> Dict[str, Any]:
        statuses = [step["status"] for step in results["steps"]]
        if "error" in statuses:
            results["workflow_status"] = "error"
        elif any(not report.passed for report in results["reports"]):
            results["workflow_status"] = "failed"
        else:
            results["workflow_status"] = "completed"
        self._notify_workflow_status(results["workflow_status"], f"{results['scenario']} finished")
        self._save_workflow_summary(results)
        return results

    def run_scenario(self, scenario: Scenario, command: Optional[str] = None) -> Dict[str, Any]:
        """Emit every requested artifact for the scenario"""
        results = self._new_results(scenario, command or f"run {scenario.name}")
        triple = self._assemble(results, scenario)
        if triple is not None:
            writer = ArtifactWriter(self.output_folder)
            if "profile" in scenario.outputs:
                self._write_profile(results, scenario, triple, writer)
            if "weyl" in scenario.outputs:
                self._write_weyl(results, scenario, triple, writer)
            if "dynamical" in scenario.outputs:
                self._write_dynamical(results, scenario, triple, writer)
            if "verify" in scenario.outputs:
                self._verify(results, scenario, triple, writer)
        return self._finish(results)

    def verify(self, scenario: Scenario) -> Dict[str, Any]:
        """Run only the verification battery"""
        results = self._new_results(scenario, f"verify {scenario.name}")
        triple = self._assemble(results, scenario)
        if triple is not None:
            self._verify(results, scenario, triple, ArtifactWriter(self.output_folder))
        return self._finish(results)

    def weyl(self, scenario: Scenario, z_list: Sequence[complex]) -> Dict[str, Any]:
        """Weyl table at the given spectral parameters"""
        results = self._new_results(scenario, f"weyl {scenario.name}")
        triple = self._assemble(results, scenario)
        if triple is not None:
            self._write_weyl(results, scenario, triple, ArtifactWriter(self.output_folder), z_list)
        return self._finish(results)

    def cmd_example(self, name: str) -> Dict[str, Any]:
        """Materialize a canned example and run it"""
        return self.run_scenario(get_example(name), command=f"example {name}")

    def _save_workflow_summary(self, results: Dict[str, Any]) -> Optional[str]:
        """Render run_summary.md into the output folder"""
        steps = [
            {
                "name": step["step"],
                "status": step["status"],
                "error": step["error"],
                "emoji": {"success": "✅", "skipped": "⏭️"}.get(step["status"], "❌"),
            }
            for step in results["steps"]
        ]
        reports = [
            {
                "check_id": report.check_id,
                "worst": format_float(report.worst_residual),
                "threshold": format_float(report.threshold),
                "passed": "true" if report.passed else "false",
            }
            for report in results["reports"]
        ]
        artifacts = [os.path.basename(path) for path in results["saved_files"]]
        content = render_run_summary(results["scenario"], results["command"], results["workflow_status"],
                                     steps, reports, artifacts)
        summary_file = os.path.join(self.output_folder, "run_summary.md")
        try:
            with open(summary_file, 'w', encoding='utf-8', newline='\n') as f:
                f.write(content)
        except OSError as e:
            logger.error(f"❌ Error saving run summary: {str(e)}")
            return None
        logger.info("💾 Run summary saved to: run_summary.md")
        return summary_file

    def get_workflow_summary(self, results: Dict[str, Any]) -> str:
        """Console summary of a run"""
        summary = f"\nSCENARIO: {results['scenario']}\nSTATUS: {results['workflow_status'].upper()}\n\n"
        for i, step in enumerate(results["steps"], 1):
            status_emoji = {"success": "✅", "skipped": "⏭️"}.get(step["status"], "❌")
            summary += f"{i}. {step['step']}: {status_emoji} {step['status']}"
            summary += f" ({step['error']})\n" if step["error"] else "\n"
        for report in results["reports"]:
            status_emoji = "✅" if report.passed else "❌"
            summary += f"   {status_emoji} {report.check_id}: worst {report.worst_residual:.3e} " \
                       f"(threshold {report.threshold:.1e})\n"
        return summary


def exit_code(results: Dict[str, Any]) -> int:
    """0 when everything requested passed, 1 on a failed check, 2 on an engine or scenario error"""
    if results["workflow_status"] == "error":
        return EXIT_ERROR
    if any(not report.passed for report in results["reports"]):
        return EXIT_CHECK_FAILED
    return EXIT_OK


def failing_reports(results: Dict[str, Any]) -> List[VerifyReport]:
    return [report for report in results["reports"] if not report.passed]
