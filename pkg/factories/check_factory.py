"""
Factory for creating verification checks by id.
"""

from typing import List, Optional

from verify import BaseCheck
from verify.suite import (
    DualOdeCheck,
    HerglotzCheck,
    IdentityCheck,
    MembershipCheck,
    OracleCheck,
    PdeCheck,
    PiSInverseCheck,
    PositivityCheck,
    WeylRoutesCheck,
)


class CheckFactory:
    """Factory for creating verification checks"""

    def __init__(self):
        self._check_mapping = {
            'check_identity': IdentityCheck,
            'check_positivity': PositivityCheck,
            'check_dual_ode': DualOdeCheck,
            'check_pispluss': PiSInverseCheck,
            'check_pde': PdeCheck,
            'check_oracle': OracleCheck,
            'check_weyl_routes': WeylRoutesCheck,
            'check_herglotz': HerglotzCheck,
            'check_weyl_membership': MembershipCheck,
        }
        self._aliases = {
            'identity': 'check_identity',
            'positivity': 'check_positivity',
            'dual_ode': 'check_dual_ode',
            'pispluss': 'check_pispluss',
            'pde': 'check_pde',
            'oracle': 'check_oracle',
            'weyl_routes': 'check_weyl_routes',
            'herglotz': 'check_herglotz',
            'membership': 'check_weyl_membership',
            'weyl_membership': 'check_weyl_membership',
        }

    def create_check(self, check_id: str) -> Optional[BaseCheck]:
        """Create a check for the given id or alias; None when unknown"""
        key = check_id.lower()
        key = self._aliases.get(key, key)
        check_class = self._check_mapping.get(key)
        return check_class() if check_class else None

    def create_all(self, only: Optional[List[str]] = None) -> List[BaseCheck]:
        """Create every supported check, or just the named ones, in battery order"""
        if not only:
            return [check_class() for check_class in self._check_mapping.values()]
        checks = []
        for check_id in only:
            check = self.create_check(check_id)
            if check is None:
                raise KeyError(f"Unknown check: {check_id}")
            checks.append(check)
        return checks

    def get_supported_checks(self) -> list:
        return list(self._check_mapping.keys())
