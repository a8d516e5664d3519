"""
Verification reports and their line-oriented serialization.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List


def format_float(value: float) -> str:
    """Shortest round-trip representation."""
    return repr(float(value))


@dataclass(frozen=True)
class VerifyReport:
    check_id: str
    grid: str
    worst_residual: float
    threshold: float
    location: str
    details: Dict[str, Any] = field(default_factory=dict, compare=False)

    @property
    def passed(self) -> bool:
        return self.worst_residual <= self.threshold

    def to_line(self) -> str:
        return (
            f"check_id={self.check_id} "
            f"worst={format_float(self.worst_residual)} "
            f"threshold={format_float(self.threshold)} "
            f"pass={'true' if self.passed else 'false'} "
            f"location={self.location.replace(' ', '')} "
            f"grid={self.grid.replace(' ', '')}"
        )


def report_lines(reports: Iterable[VerifyReport]) -> List[str]:
    return [report.to_line() for report in reports]


def parse_report_line(line: str) -> Dict[str, str]:
    """Inverse of ``VerifyReport.to_line`` for consumers of the report file."""
    fields = {}
    for token in line.strip().split(" "):
        key, _, value = token.partition("=")
        fields[key] = value
    return fields
