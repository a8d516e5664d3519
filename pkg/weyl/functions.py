"""
Weyl and GW functions of the transformed systems.

The Y-quotient is the primary route; the linear-fractional realization is
evaluated as a cross-check wherever both are defined.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

import numpy as np

from config_package import Tolerances
from gbdt import eval_transfer
from matlin import ConsistencyError, HypothesisError, PoleError, norm2
from seed import Branch, GbdtTriple, SystemKind, s0_min_eigenvalue
from solutions import column_split_fundamental, seed_data
from .realization import build_realization, lft_realize

logger = logging.getLogger(__name__)


class WeylMethod(Enum):
    Y_QUOTIENT = "y_quotient"
    REALIZATION = "realization"


@dataclass(frozen=True, eq=False)
class WeylValue:
    z: complex
    phi: np.ndarray
    kind: SystemKind
    method: WeylMethod

    def imaginary_part_min_eig(self) -> float:
        im = (self.phi - self.phi.conj().T) / 2j
        return float(np.min(np.linalg.eigvalsh(im)))


def theta(p: int) -> np.ndarray:
    I = np.eye(p, dtype=complex)
    return np.block([[I, -I], [I, I]]) / np.sqrt(2.0)


def _require_admissible(triple: GbdtTriple, z: complex) -> None:
    if complex(z).imag <= 0:
        raise HypothesisError(f"Weyl functions are evaluated in the upper half-plane, got z={complex(z):.6g}")
    if s0_min_eigenvalue(triple) <= 0:
        raise HypothesisError("Weyl function construction needs S(0) > 0")


def y_blocks(triple: GbdtTriple, z: complex) -> Tuple[np.ndarray, np.ndarray]:
    """Y(z) = [Theta] w_A(0, z) Z(z) [I; 0], split into p x p blocks."""
    p = triple.p
    data = seed_data(triple.seed, triple.kind, z)
    Y = eval_transfer(triple, 0.0, z) @ data.Z[:, :p]
    if triple.kind.is_self_adjoint:
        Y = theta(p) @ Y
    return Y[:p], Y[p:]


def weyl_via_y(triple: GbdtTriple, z: complex) -> WeylValue:
    """phi = i Y2 Y1^{-1} (self-adjoint) or Y2 Y1^{-1} (skew)."""
    _require_admissible(triple, z)
    y1, y2 = y_blocks(triple, z)
    if np.linalg.cond(y1) > Tolerances.EVALUATION['condition_cap']:
        raise PoleError(z, f"Y1(z) is not invertible at z={complex(z):.6g}; retry at a different z")
    phi = np.linalg.solve(y1.T, y2.T).T
    if triple.kind.is_self_adjoint:
        phi = 1j * phi
    return WeylValue(z=complex(z), phi=phi, kind=triple.kind, method=WeylMethod.Y_QUOTIENT)


def weyl_realization(triple: GbdtTriple, z: complex, cross_check: bool = True) -> WeylValue:
    """phi through the realization {D, C1, C2, B, A_x}, checked against the Y-quotient."""
    _require_admissible(triple, z)
    data = build_realization(triple, z)
    lft = lft_realize(data.D, data.C1, data.C2, data.B, triple.A)
    phi = data.prefactor * lft(z)
    value = WeylValue(z=complex(z), phi=phi, kind=triple.kind, method=WeylMethod.REALIZATION)
    if cross_check:
        try:
            reference = weyl_via_y(triple, z).phi
        except PoleError:
            logger.debug(f"Y-quotient undefined at z={complex(z):.6g}, realization kept unchecked")
            return value
        gap = norm2(phi - reference)
        if gap > Tolerances.EVALUATION['route_agreement'] * max(1.0, norm2(reference)):
            raise ConsistencyError(f"Weyl routes disagree by {gap:.3e} at z={complex(z):.6g}")
    return value


def half_plane_margin(triple: GbdtTriple) -> float:
    """
    M such that the Weyl formulas are used on Im z > M.

    Self-adjoint: ||Q||. Skew: start from ||Q|| + ||A|| + 1 and halve while
    Y1 stays well conditioned on the segment Im z = M + 1, Re z in [-5, 5];
    never below ||Q||.
    """
    q_norm = triple.q_norm
    if triple.kind.is_self_adjoint:
        return q_norm
    limit = Tolerances.EVALUATION['y1_condition']
    margin = q_norm + norm2(triple.A) + 1.0
    while margin / 2.0 >= q_norm and margin / 2.0 > 0:
        candidate = margin / 2.0
        try:
            ok = all(np.linalg.cond(y_blocks(triple, complex(re, candidate + 1.0))[0]) <= limit
                     for re in np.linspace(-5.0, 5.0, 10))
        except PoleError:
            ok = False
        if not ok:
            break
        margin = candidate
    return margin


def weyl_z_grid(triple: GbdtTriple, count: int = 10) -> np.ndarray:
    """Points on Im z = M + 1, Re z in [-5, 5]."""
    level = half_plane_margin(triple) + 1.0
    return np.linspace(-5.0, 5.0, count) + 1j * level


def membership_coefficients(triple: GbdtTriple, z: complex, phi: np.ndarray,
                            branch: Branch = Branch.PLUS) -> Tuple[np.ndarray, np.ndarray]:
    """
    Mode coefficients G with W(x, z) v = w_A(x) e^{icxj} Z diag(e^{ix zeta}, e^{-ix zeta}) G.

    v = Theta* [I; -i phi] in the self-adjoint kind and [I; phi] in the skew
    kind. The growing-mode block is flushed to zero when it is below the
    configured fraction of the decaying block.
    """
    p = triple.p
    I = np.eye(p, dtype=complex)
    if triple.kind.is_self_adjoint:
        vector = theta(p).conj().T @ np.vstack([I, -1j * phi])
    else:
        vector = np.vstack([I, phi])
    data = seed_data(triple.seed, triple.kind, z, branch)
    G = np.linalg.solve(eval_transfer(triple, 0.0, z) @ data.Z, vector)
    top, bottom = G[:p], G[p:]
    if norm2(bottom) <= Tolerances.STEPS['membership_flush'] * norm2(top):
        bottom = np.zeros_like(bottom)
    return top, bottom


def membership_vector(triple: GbdtTriple, x: float, z: complex,
                      coefficients: Tuple[np.ndarray, np.ndarray]) -> np.ndarray:
    top, bottom = coefficients
    return column_split_fundamental(triple, x, z, top, bottom)


def gw_bound(triple: GbdtTriple, z: complex, ell: float, phi: Optional[np.ndarray] = None,
             samples: int = 201) -> float:
    """sup over x in [0, ell] of ||e^{-izx} W(x, z) [I; phi]||."""
    if triple.kind.is_self_adjoint:
        raise HypothesisError("GW functions are defined for the skew-self-adjoint kind")
    phi = weyl_via_y(triple, z).phi if phi is None else phi
    coefficients = membership_coefficients(triple, z, phi)
    sup = 0.0
    for x in np.linspace(0.0, ell, samples):
        value = norm2(np.exp(-1j * z * x) * membership_vector(triple, float(x), z, coefficients))
        sup = max(sup, value)
    return sup
