"""
Linear-fractional realization of the Weyl function.
"""

from dataclasses import dataclass
from typing import Callable

import numpy as np

from config_package import Tolerances
from matlin import ConsistencyError, PoleError, norm2
from seed import GbdtTriple
from solutions import zeta_branch


@dataclass(frozen=True, eq=False)
class WeylRealization:
    z: complex
    h: complex
    D: np.ndarray
    C1: np.ndarray
    C2: np.ndarray
    B: np.ndarray
    Across: np.ndarray
    prefactor: complex


def _pole_guard(M: np.ndarray, z: complex, label: str) -> None:
    if np.linalg.cond(M) > Tolerances.EVALUATION['condition_cap']:
        raise PoleError(z, f"{label} is singular at z={complex(z):.6g}")


def lft_realize(D, C1, C2, B, A) -> Callable[[complex], np.ndarray]:
    """
    z -> D + (D C1 - C2)(A_x - zI)^{-1} B with A_x = A - B C1.

    Every evaluation is cross-checked against
    (D - C2 (A - zI)^{-1} B)(I - C1 (A - zI)^{-1} B)^{-1}.
    """
    D, C1, C2, B, A = (np.asarray(M, dtype=complex) for M in (D, C1, C2, B, A))
    n = A.shape[0]
    p = D.shape[0]
    Across = A - B @ C1
    tol = Tolerances.EVALUATION['lft_cross_check']

    def evaluate(z: complex) -> np.ndarray:
        shifted = Across - z * np.eye(n)
        _pole_guard(shifted, z, "A_x - zI")
        right = D + (D @ C1 - C2) @ np.linalg.solve(shifted, B)

        plain = A - z * np.eye(n)
        _pole_guard(plain, z, "A - zI")
        RB = np.linalg.solve(plain, B)
        denominator = np.eye(p) - C1 @ RB
        _pole_guard(denominator, z, "I - C1 (A - zI)^{-1} B")
        left = np.linalg.solve(denominator.T, (D - C2 @ RB).T).T

        gap = norm2(right - left)
        if gap > tol * max(1.0, norm2(right)):
            raise ConsistencyError(f"realization routes differ by {gap:.3e} at z={complex(z):.6g}")
        return right

    return evaluate


def build_realization(triple: GbdtTriple, z: complex) -> WeylRealization:
    """Realization data {D, C1, C2, B, A_x} for the triple's system kind."""
    kind = triple.kind
    seed = triple.seed
    p = triple.p
    a, c = seed.a, seed.c
    zeta = zeta_branch(z, seed, kind)
    lambda1 = triple.Pi0[:, :p]
    lambda2 = triple.Pi0[:, p:]
    S0inv = np.linalg.inv(triple.S0)
    I = np.eye(p, dtype=complex)

    if kind.is_self_adjoint:
        h = zeta - z + c
        if abs(a - h) <= 1e-14 * max(1.0, abs(a)):
            raise PoleError(z, f"a - h(z) vanishes at z={complex(z):.6g}")
        D = (a + h) / np.sqrt(2.0) * I
        C1 = 1j / (a - h) * (lambda1.conj().T + lambda2.conj().T) @ S0inv
        C2 = 1j / np.sqrt(2.0) * (lambda1.conj().T - lambda2.conj().T) @ S0inv
        B = a * lambda1 + h * lambda2
        prefactor = 1j * np.sqrt(2.0) / (a - h)
    else:
        h = z - c - zeta
        D = h * I
        C1 = (1.0 / a) * lambda1.conj().T @ S0inv
        C2 = 1j * lambda2.conj().T @ S0inv
        B = 1j * a * lambda1 + h * lambda2
        prefactor = 1.0 / (1j * a)

    return WeylRealization(z=complex(z), h=complex(h), D=D, C1=C1, C2=C2, B=B,
                           Across=triple.A - B @ C1, prefactor=complex(prefactor))
