"""
jinja2 templates for CSV headers and the run summary.
"""

from typing import Any, Dict, List

from jinja2 import DictLoader, Environment, StrictUndefined

_TEMPLATES = {
    "csv_header": (
        "# gbdt-dirac {{ table }}\n"
        "# scenario: {{ name }}\n"
        "# kind: {{ kind }}\n"
        "# p: {{ p }}\n"
        "# n: {{ n }}\n"
        "{% for key, value in parameters|dictsort %}"
        "# {{ key }}: {{ value }}\n"
        "{% endfor %}"
    ),
    "run_summary": (
        "# GBDT run summary: {{ name }}\n"
        "\n"
        "Command: `{{ command }}`\n"
        "Status: **{{ status|upper }}**\n"
        "\n"
        "## Steps\n"
        "\n"
        "{% for step in steps %}"
        "{{ loop.index }}. {{ step.emoji }} {{ step.name }}: {{ step.status }}"
        "{% if step.error %} ({{ step.error }}){% endif %}\n"
        "{% endfor %}"
        "{% if reports %}"
        "\n"
        "## Verification\n"
        "\n"
        "| check | worst | threshold | pass |\n"
        "|---|---|---|---|\n"
        "{% for report in reports %}"
        "| {{ report.check_id }} | {{ report.worst }} | {{ report.threshold }} | {{ report.passed }} |\n"
        "{% endfor %}"
        "{% endif %}"
        "\n"
        "## Artifacts\n"
        "\n"
        "{% for path in artifacts %}"
        "- {{ path }}\n"
        "{% else %}"
        "- none\n"
        "{% endfor %}"
    ),
}

_environment = Environment(
    loader=DictLoader(_TEMPLATES),
    undefined=StrictUndefined,
    keep_trailing_newline=True,
    autoescape=False,
)


def render_csv_header(table: str, name: str, kind: str, p: int, n: int,
                      parameters: Dict[str, Any]) -> str:
    return _environment.get_template("csv_header").render(
        table=table, name=name, kind=kind, p=p, n=n, parameters=parameters,
    )


def render_run_summary(name: str, command: str, status: str, steps: List[Dict[str, Any]],
                       reports: List[Dict[str, Any]], artifacts: List[str]) -> str:
    return _environment.get_template("run_summary").render(
        name=name, command=command, status=status, steps=steps, reports=reports, artifacts=artifacts,
    )
