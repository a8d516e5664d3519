"""
Fundamental solutions of the seed and transformed Dirac systems.

Seed system (self-adjoint):  y' = i(z j + j V(x)) y
Seed system (skew):          y' = (i z j + j V(x)) y
with V = [[0, v], [v*, 0]] and v(x) = a e^{2icx} I_p.
"""

import logging
from dataclasses import dataclass

import numpy as np

from config_package import Tolerances
from gbdt import eval_state, eval_transfer
from matlin import BranchPointError, NormalizationError
from seed import Branch, GbdtTriple, SeedPotential, SystemKind

logger = logging.getLogger(__name__)


def zeta_branch(z: complex, seed: SeedPotential, kind: SystemKind,
                branch: Branch = Branch.PLUS) -> complex:
    """
    zeta(z) with zeta^2 = (z - c)^2 -/+ |a|^2.

    ``Branch.PLUS`` is the branch with Im(zeta) > 0 on the upper half-plane;
    where zeta is real the sign is fixed by continuity (Re zeta has the sign
    of Re(z - c), non-negative when Re(z - c) = 0). ``Branch.MINUS`` negates it.
    """
    z = complex(z)
    w = z - seed.c
    square = w * w + kind.modulus_sign * abs(seed.a) ** 2
    tol = Tolerances.EVALUATION['zeta_real']
    zeta = complex(np.sqrt(square))
    if abs(zeta) <= tol * max(1.0, abs(w)):
        raise BranchPointError(f"zeta(z) vanishes at z={z:.6g}")
    if abs(zeta.imag) <= tol * abs(zeta):
        zeta = complex(zeta.real, 0.0)
        if w.real != 0:
            zeta = zeta if zeta.real * w.real >= 0 else -zeta
        elif zeta.real < 0:
            zeta = -zeta
    elif zeta.imag < 0:
        zeta = -zeta
    return branch.sign * zeta


@dataclass(frozen=True, eq=False)
class SeedFundamental:
    z: complex
    zeta: complex
    Z: np.ndarray
    branch: Branch

    @property
    def determinant(self) -> complex:
        return complex(np.linalg.det(self.Z))


def seed_z_matrix(seed: SeedPotential, kind: SystemKind, z: complex, zeta: complex) -> np.ndarray:
    I = np.eye(kind.p, dtype=complex)
    a, c = seed.a, seed.c
    if kind.is_self_adjoint:
        return np.block([[a * I, a * I],
                         [(zeta - z + c) * I, (-zeta - z + c) * I]])
    return np.block([[1j * a * I, 1j * a * I],
                     [(z - c - zeta) * I, (z - c + zeta) * I]])


def seed_data(seed: SeedPotential, kind: SystemKind, z: complex,
              branch: Branch = Branch.PLUS) -> SeedFundamental:
    zeta = zeta_branch(z, seed, kind, branch)
    return SeedFundamental(z=complex(z), zeta=zeta, Z=seed_z_matrix(seed, kind, z, zeta), branch=branch)


def _phase(kind: SystemKind, values: complex) -> np.ndarray:
    p = kind.p
    return np.diag(np.concatenate([np.full(p, np.exp(1j * values)), np.full(p, np.exp(-1j * values))]))


def seed_fundamental(seed: SeedPotential, kind: SystemKind, x: float, z: complex,
                     branch: Branch = Branch.PLUS) -> np.ndarray:
    """u(x, z) = e^{icxj} Z(z) e^{ix zeta j}"""
    data = seed_data(seed, kind, z, branch)
    return _phase(kind, seed.c * x) @ data.Z @ _phase(kind, data.zeta * x)


def transformed_fundamental(triple: GbdtTriple, x: float, z: complex,
                            branch: Branch = Branch.PLUS) -> np.ndarray:
    """u~(x, z) = w_A(x, z) u(x, z)"""
    return eval_transfer(triple, x, z) @ seed_fundamental(triple.seed, triple.kind, x, z, branch)


def normalized_fundamental(triple: GbdtTriple, x: float, z: complex,
                           branch: Branch = Branch.PLUS) -> np.ndarray:
    """W(x, z) = w_A(x, z) u(x, z) Z(z)^{-1} w_A(0, z)^{-1}, so that W(0, z) = I."""
    data = seed_data(triple.seed, triple.kind, z, branch)
    w0 = eval_transfer(triple, 0.0, z)
    for label, M in (("Z(z)", data.Z), ("w_A(0, z)", w0)):
        if np.linalg.cond(M) > Tolerances.EVALUATION['condition_cap']:
            raise NormalizationError(f"{label} is singular at z={complex(z):.6g}")
    if x == 0:
        return np.eye(2 * triple.p, dtype=complex)
    u = _phase(triple.kind, triple.seed.c * x) @ data.Z @ _phase(triple.kind, data.zeta * x)
    right = np.linalg.solve((w0 @ data.Z).T, (eval_transfer(triple, x, z) @ u).T).T
    return right


def column_split_fundamental(triple: GbdtTriple, x: float, z: complex, top: np.ndarray,
                             bottom: np.ndarray, branch: Branch = Branch.PLUS) -> np.ndarray:
    """
    w_A(x, z) e^{icxj} Z diag(e^{ix zeta} top, e^{-ix zeta} bottom).

    Equals w_A(x) u(x) [top; bottom] with the two modes scaled separately, so a
    zero growing-mode coefficient stays exactly zero.
    """
    data = seed_data(triple.seed, triple.kind, z, branch)
    state = eval_state(triple, x)
    growing = np.exp(-1j * data.zeta * x) * bottom if np.any(bottom) else np.zeros_like(bottom)
    modes = np.vstack([np.exp(1j * data.zeta * x) * top, growing])
    return eval_transfer(triple, x, z, state) @ _phase(triple.kind, triple.seed.c * x) @ data.Z @ modes
