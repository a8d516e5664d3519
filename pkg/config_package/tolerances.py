"""
Centralized Tolerance Configuration

Every numeric tolerance, cap and step used across the engine lives here.
Update values here to keep kernel, construction, evaluation and checks consistent.
"""

from typing import Dict

from . import GBDT_EXP_CAP, GBDT_RK4_STEP


class Tolerances:
    """Centralized tolerance management"""

    # Dense kernel
    KERNEL = {
        'exp_norm_cap': 700.0,
        'sqrt_residual': 1e-10,
        'sqrt_cut': 1e-12,
        'sylvester_gap': 1e-8,
        'sylvester_residual': 1e-10,
    }

    # Seed construction
    CONSTRUCTION = {
        'root_relative': 1e-9,
        'degenerate': 1e-12,
        'hermitian': 1e-12,
        'identity_s0': 1e-10,
        'supplied_s0_warning': 1e-8,
        'realness': 1e-12,
    }

    # x-dependent evaluation
    EVALUATION = {
        'exp_cap': GBDT_EXP_CAP,
        'condition_cap': 1e12,
        'quadrature_abs': 1e-10,
        'quadrature_rel': 1e-13,
        'quadrature_max_depth': 40,
        'quadrature_nodes': 12,
        'omega_residue': 1e-11,
        'positivity_floor': 1e-14,
        'zeta_real': 1e-12,
        'lft_cross_check': 1e-9,
        'route_agreement': 1e-8,
        'y1_condition': 1e4,
    }

    # Verification steps
    STEPS = {
        'ode_fd': 1e-5,
        'pde_fd': 1e-4,
        'rk4': GBDT_RK4_STEP,
        'monitor_h': 0.05,
        'membership_flush': 1e-8,
        'membership_tail': 1e-3,
        'membership_window': 0.5,
    }

    # Check thresholds (pass iff worst residual <= threshold)
    CHECK_THRESHOLDS = {
        'check_identity': 1e-9,
        'check_positivity': 0.0,
        'check_monitor': 1e-9,
        'check_dual_ode': 1e-6,
        'check_pispluss': 1e-5,
        'check_pde': 1e-5,
        'check_dirac_weyl': 1e-5,
        'check_weyl_membership': 1e-3,
        'check_oracle': 1e-6,
        'check_weyl_routes': 1e-9,
        'check_herglotz': 1e-10,
    }

    @classmethod
    def get_threshold(cls, check_id: str) -> float:
        """Get the pass threshold for a check"""
        if check_id not in cls.CHECK_THRESHOLDS:
            raise KeyError(f"No threshold registered for check '{check_id}'")
        return cls.CHECK_THRESHOLDS[check_id]

    @classmethod
    def get_all_thresholds(cls) -> Dict[str, float]:
        """Get a copy of all check thresholds"""
        return dict(cls.CHECK_THRESHOLDS)
