"""
Concrete checks bound to a ``CheckPlan``.
"""

from seed import GbdtTriple, s0_min_eigenvalue
from weyl import weyl_z_grid
from .base_check import BaseCheck, CheckPlan
from .checks import (
    check_dual_ode,
    check_herglotz,
    check_identity,
    check_oracle,
    check_pde,
    check_pispluss,
    check_positivity,
    check_weyl_membership,
    check_weyl_routes,
)
from .report import VerifyReport


def _weyl_ready(triple: GbdtTriple) -> bool:
    return s0_min_eigenvalue(triple) > 0


class IdentityCheck(BaseCheck):
    check_id = "check_identity"

    def execute(self, triple: GbdtTriple, plan: CheckPlan) -> VerifyReport:
        return check_identity(triple, plan.x_grid)


class PositivityCheck(BaseCheck):
    check_id = "check_positivity"

    def applies_to(self, triple: GbdtTriple) -> bool:
        return _weyl_ready(triple)

    def execute(self, triple: GbdtTriple, plan: CheckPlan) -> VerifyReport:
        return check_positivity(triple, plan.x_grid)


class DualOdeCheck(BaseCheck):
    check_id = "check_dual_ode"

    def execute(self, triple: GbdtTriple, plan: CheckPlan) -> VerifyReport:
        return check_dual_ode(triple, plan.x_grid)


class PiSInverseCheck(BaseCheck):
    check_id = "check_pispluss"

    def execute(self, triple: GbdtTriple, plan: CheckPlan) -> VerifyReport:
        return check_pispluss(triple, plan.x_grid[::5])


class PdeCheck(BaseCheck):
    check_id = "check_pde"

    def execute(self, triple: GbdtTriple, plan: CheckPlan) -> VerifyReport:
        step = max(1, len(plan.x_grid) // 20)
        return check_pde(triple, plan.x_grid[::step][:20], plan.xi_grid)


class OracleCheck(BaseCheck):
    check_id = "check_oracle"

    def execute(self, triple: GbdtTriple, plan: CheckPlan) -> VerifyReport:
        return check_oracle(triple, plan.z_list, plan.oracle_x)


class WeylRoutesCheck(BaseCheck):
    check_id = "check_weyl_routes"

    def applies_to(self, triple: GbdtTriple) -> bool:
        return _weyl_ready(triple)

    def execute(self, triple: GbdtTriple, plan: CheckPlan) -> VerifyReport:
        return check_weyl_routes(triple, weyl_z_grid(triple))


class HerglotzCheck(BaseCheck):
    check_id = "check_herglotz"

    def applies_to(self, triple: GbdtTriple) -> bool:
        return triple.kind.is_self_adjoint and _weyl_ready(triple)

    def execute(self, triple: GbdtTriple, plan: CheckPlan) -> VerifyReport:
        return check_herglotz(triple, weyl_z_grid(triple))


class MembershipCheck(BaseCheck):
    check_id = "check_weyl_membership"

    def applies_to(self, triple: GbdtTriple) -> bool:
        return _weyl_ready(triple)

    def execute(self, triple: GbdtTriple, plan: CheckPlan) -> VerifyReport:
        reports = [check_weyl_membership(triple, z, plan.x_max) for z in plan.membership_z]
        return max(reports, key=lambda report: report.worst_residual)
