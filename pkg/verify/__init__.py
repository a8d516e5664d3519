"""
Oracles, invariant checks and verification reports.
"""

from .report import VerifyReport, report_lines, parse_report_line, format_float
from .oracle import DiracSystem, seed_system, transformed_system, rk4_integrate
from .checks import (
    check_identity,
    check_positivity,
    check_dual_ode,
    check_pispluss,
    check_pde,
    check_weyl_membership,
    check_oracle,
    check_weyl_routes,
    check_herglotz,
    membership_partials,
)
from .base_check import BaseCheck, CheckPlan, CheckStatus, run_checks

__all__ = [
    "VerifyReport", "report_lines", "parse_report_line", "format_float",
    "DiracSystem", "seed_system", "transformed_system", "rk4_integrate",
    "check_identity", "check_positivity", "check_dual_ode", "check_pispluss",
    "check_pde", "check_weyl_membership", "check_oracle", "check_weyl_routes",
    "check_herglotz", "membership_partials",
    "BaseCheck", "CheckPlan", "CheckStatus", "run_checks",
]
