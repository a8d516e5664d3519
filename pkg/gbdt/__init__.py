"""
x-dependent GBDT evaluators.
"""

from .evaluator import (
    SMethod,
    GbdtState,
    check_exponent_range,
    eval_pi,
    pi_matrix,
    s_integrand,
    spectra_disjoint,
    eval_s,
    invert_s,
    eval_state,
    resolvent_guard,
    eval_transfer,
    eval_potential,
    potential_from_state,
    potential_matrix,
    omega_with_residue,
    eval_omega,
    min_eig_s,
    monitor_matrices,
)

__all__ = [
    "SMethod", "GbdtState", "check_exponent_range", "eval_pi", "pi_matrix",
    "s_integrand", "spectra_disjoint", "eval_s", "invert_s", "eval_state",
    "resolvent_guard", "eval_transfer", "eval_potential", "potential_from_state",
    "potential_matrix",
    "omega_with_residue", "eval_omega", "min_eig_s", "monitor_matrices",
]
