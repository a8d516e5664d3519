"""
Seed potentials, commuting roots and GBDT triple assembly.
"""

from .types import Kind, Branch, SystemKind, SeedPotential, JordanBlock, JordanSpec, SeedRealization, GbdtTriple
from .roots import root_target, build_q_jordan, build_q_generic, derive_f34, check_root
from .assembly import assemble_triple, check_realness_hypotheses, s0_min_eigenvalue

__all__ = [
    "Kind", "Branch", "SystemKind", "SeedPotential", "JordanBlock", "JordanSpec",
    "SeedRealization", "GbdtTriple", "root_target", "build_q_jordan", "build_q_generic",
    "derive_f34", "check_root", "assemble_triple", "check_realness_hypotheses",
    "s0_min_eigenvalue",
]
