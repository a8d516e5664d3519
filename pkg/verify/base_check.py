from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Tuple
import logging

import numpy as np

from matlin import GbdtError
from seed import GbdtTriple
from .report import VerifyReport

logger = logging.getLogger(__name__)


class CheckStatus:
    """Check status constants and helper methods"""
    PENDING = "pending"
    RUNNING = "running"
    SUCCESS = "success"
    FAILED = "failed"
    ERROR = "error"

    @staticmethod
    def get_emoji(status: str) -> str:
        """Get emoji for status"""
        emoji_map = {
            CheckStatus.PENDING: "⏳",
            CheckStatus.RUNNING: "🔄",
            CheckStatus.SUCCESS: "✅",
            CheckStatus.FAILED: "❌",
            CheckStatus.ERROR: "❌",
        }
        return emoji_map.get(status, "❓")


@dataclass
class CheckPlan:
    """Grids a check battery runs on"""
    x_grid: Tuple[float, ...]
    xi_grid: Tuple[float, ...] = ()
    z_list: Tuple[complex, ...] = ()
    membership_z: Tuple[complex, ...] = ()
    x_max: Optional[float] = None
    oracle_x: Tuple[float, ...] = (0.5, 1.0, 2.0)

    @classmethod
    def default_for(cls, triple: GbdtTriple) -> "CheckPlan":
        if triple.kind.is_self_adjoint:
            x_grid = tuple(float(x) for x in np.linspace(0.0, 2.0, 101))
        else:
            x_grid = tuple(float(x) for x in np.linspace(-2.0, 2.0, 101))
        xi_grid = tuple(float(x) for x in np.linspace(-1.0, 1.0, 20))
        level = max(5.0, triple.q_norm + 1.0)
        z_list = tuple(complex(re, level) for re in np.linspace(-2.0, 2.0, 5))
        return cls(x_grid=x_grid, xi_grid=xi_grid, z_list=z_list, membership_z=(complex(0.0, level),))


class BaseCheck(ABC):
    """Base class for all checks with status reporting"""

    check_id: str = "base"

    def __init__(self):
        self.status_callback: Optional[Callable] = None
        self.current_status = CheckStatus.PENDING
        self.status_message = ""

    @abstractmethod
    def execute(self, triple: GbdtTriple, plan: CheckPlan) -> VerifyReport:
        """Run the check on a triple"""

    def applies_to(self, triple: GbdtTriple) -> bool:
        return True

    def set_status_callback(self, callback: Optional[Callable] = None):
        """Set callback function for status updates"""
        self.status_callback = callback

    def update_status(self, status: str, message: str = ""):
        """Update check status and notify the callback"""
        self.current_status = status
        self.status_message = message
        emoji = CheckStatus.get_emoji(status)
        log_message = f"{emoji} {status.upper()}"
        if message:
            log_message += f": {message}"
        self.log(log_message, error=status in (CheckStatus.FAILED, CheckStatus.ERROR))
        if self.status_callback:
            try:
                self.status_callback(check_id=self.check_id, status=status, message=message)
            except Exception as e:
                self.log(f"❌ Error in status callback: {str(e)}", error=True)

    def log(self, message: str, error: bool = False):
        """Log check activity"""
        (logger.warning if error else logger.info)(f"[{self.check_id}] {message}")

    def execute_with_status(self, triple: GbdtTriple, plan: CheckPlan) -> VerifyReport:
        """Execute with automatic status updates; engine errors become failing reports"""
        self.update_status(CheckStatus.RUNNING, f"checking {triple.name}")
        try:
            report = self.execute(triple, plan)
        except GbdtError as e:
            self.update_status(CheckStatus.ERROR, str(e))
            return VerifyReport(self.check_id, "n/a", float('inf'), 0.0, f"error:{type(e).__name__}",
                                {"error": str(e)})
        if report.passed:
            self.update_status(CheckStatus.SUCCESS, f"worst {report.worst_residual:.3e} at {report.location}")
        else:
            self.update_status(CheckStatus.FAILED,
                               f"worst {report.worst_residual:.3e} > {report.threshold:.1e} at {report.location}")
        return report


def run_checks(checks: List[BaseCheck], triple: GbdtTriple, plan: CheckPlan) -> List[VerifyReport]:
    """Run applicable checks in order; one report per check"""
    return [check.execute_with_status(triple, plan) for check in checks if check.applies_to(triple)]
