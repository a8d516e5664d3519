"""
Evaluation of the x-dependent GBDT objects.

Pi(x) in closed form, S(x) by Sylvester solve or quadrature, the Darboux
matrix w_A(x, z), the transformed potential and the Dirac-Weyl potential.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

import numpy as np
import scipy.linalg as spla

from config_package import Tolerances
from matlin import (
    ConsistencyError,
    ExponentRangeError,
    HypothesisError,
    PoleError,
    PositivityError,
    SylvesterSingularityError,
    adaptive_gauss_legendre,
    hermitian_part,
    mat_exp,
    norm2,
    solve_sylvester,
)
from seed import GbdtTriple, check_realness_hypotheses

logger = logging.getLogger(__name__)


class SMethod(Enum):
    SYLVESTER = "sylvester"
    QUADRATURE = "quadrature"


@dataclass(frozen=True, eq=False)
class GbdtState:
    """Pi(x) blocks, S(x) and its inverse at one point."""
    x: float
    Lambda1: np.ndarray
    Lambda2: np.ndarray
    S: np.ndarray
    Sinv: np.ndarray
    condition: float

    @property
    def Pi(self) -> np.ndarray:
        return np.hstack([self.Lambda1, self.Lambda2])


def check_exponent_range(triple: GbdtTriple, x: float) -> None:
    cap = Tolerances.EVALUATION['exp_cap']
    size = abs(x) * triple.q_norm
    if size > cap:
        raise ExponentRangeError(
            f"|x|*||Q|| = {size:.6g} exceeds cap {cap:g} at x={x:g}; use the asymptotic formulas instead"
        )


def eval_pi(triple: GbdtTriple, x: float) -> Tuple[np.ndarray, np.ndarray]:
    """
    Lambda1(x) = e^{-icx}(e^{ixQ} f1 + e^{-ixQ} f2),
    Lambda2(x) = e^{icx}(e^{ixQ} f3 + e^{-ixQ} f4).
    """
    check_exponent_range(triple, x)
    r = triple.realization
    c = triple.seed.c
    grow = mat_exp(1j * x * r.Q)
    decay = mat_exp(-1j * x * r.Q)
    lambda1 = np.exp(-1j * c * x) * (grow @ r.f1 + decay @ r.f2)
    lambda2 = np.exp(1j * c * x) * (grow @ r.f3 + decay @ r.f4)
    return lambda1, lambda2


def pi_matrix(triple: GbdtTriple, x: float) -> np.ndarray:
    return np.hstack(eval_pi(triple, x))


def s_integrand(triple: GbdtTriple, x: float) -> np.ndarray:
    """Pi(x) j^{kappa+1} Pi(x)*"""
    Pi = pi_matrix(triple, x)
    return Pi @ triple.kind.j_kappa_plus_one @ Pi.conj().T


def spectra_disjoint(triple: GbdtTriple) -> bool:
    gap = Tolerances.KERNEL['sylvester_gap']
    ev = np.linalg.eigvals(triple.A)
    for alpha in ev:
        for beta in ev.conj():
            if abs(alpha - beta) <= gap * max(1.0, abs(alpha), abs(beta)):
                return False
    return True


def eval_s(triple: GbdtTriple, x: float, method: Optional[SMethod] = None) -> np.ndarray:
    """
    S(x), Hermitian.

    The Sylvester route solves A S - S A* = i Pi(x) j^kappa Pi(x)* and is used
    by default when sigma(A) and sigma(A*) are disjoint; otherwise S(0) plus
    the adaptive quadrature of Pi j^{kappa+1} Pi* over [0, x].
    """
    if x == 0:
        return np.array(triple.S0)
    if method is None:
        method = SMethod.SYLVESTER if spectra_disjoint(triple) else SMethod.QUADRATURE
    if method is SMethod.SYLVESTER:
        Pi = pi_matrix(triple, x)
        rhs = 1j * Pi @ triple.kind.j_kappa @ Pi.conj().T
        S = solve_sylvester(triple.A, triple.A.conj().T, rhs)
    else:
        check_exponent_range(triple, x)
        S = triple.S0 + adaptive_gauss_legendre(lambda r: s_integrand(triple, r), 0.0, x)
    S = hermitian_part(S)
    if not check_realness_hypotheses(triple):
        # S(x) is real under the Dirac-Weyl hypotheses
        S = S.real.astype(complex)
    return S


def invert_s(S: np.ndarray, x: float = 0.0) -> Tuple[np.ndarray, float]:
    """Inverse through a Hermitian-indefinite factorization, with condition report."""
    condition = float(np.linalg.cond(S))
    if not np.isfinite(condition) or condition > Tolerances.EVALUATION['condition_cap']:
        raise PositivityError(
            f"S(x) at x={x:g} has condition number {condition:.3e}; S(0) is likely not positive"
        )
    n = S.shape[0]
    Sinv = spla.solve(S, np.eye(n, dtype=complex), assume_a='her')
    return np.asarray(Sinv, dtype=complex), condition


def eval_state(triple: GbdtTriple, x: float, method: Optional[SMethod] = None) -> GbdtState:
    lambda1, lambda2 = eval_pi(triple, x)
    S = eval_s(triple, x, method)
    Sinv, condition = invert_s(S, x)
    return GbdtState(x=x, Lambda1=lambda1, Lambda2=lambda2, S=S, Sinv=Sinv, condition=condition)


def resolvent_guard(A: np.ndarray, z: complex) -> None:
    for ev in np.linalg.eigvals(A):
        if abs(ev - z) <= 1e-12 * max(1.0, abs(z)):
            raise PoleError(z, f"z={z:.6g} is an eigenvalue of A")


def eval_transfer(triple: GbdtTriple, x: float, z: complex,
                  state: Optional[GbdtState] = None) -> np.ndarray:
    """w_A(x, z) = I - i j^kappa Pi* S^{-1} (A - zI)^{-1} Pi"""
    resolvent_guard(triple.A, z)
    state = state or eval_state(triple, x)
    Pi = state.Pi
    n = triple.n
    resolved = np.linalg.solve(triple.A - z * np.eye(n), Pi)
    correction = triple.kind.j_kappa @ Pi.conj().T @ state.Sinv @ resolved
    return np.eye(2 * triple.p, dtype=complex) - 1j * correction


def potential_from_state(triple: GbdtTriple, state: GbdtState) -> np.ndarray:
    core = state.Lambda1.conj().T @ state.Sinv @ state.Lambda2
    v = triple.seed.v(state.x)
    if triple.kind.is_self_adjoint:
        return v - 2j * core
    return v + 2.0 * core


def eval_potential(triple: GbdtTriple, x: float, state: Optional[GbdtState] = None) -> np.ndarray:
    """Transformed block v~(x)."""
    return potential_from_state(triple, state or eval_state(triple, x))


def potential_matrix(triple: GbdtTriple, x: float, state: Optional[GbdtState] = None) -> np.ndarray:
    """Full 2p x 2p potential [[0, v~], [v~*, 0]]."""
    v = eval_potential(triple, x, state)
    zero = np.zeros_like(v)
    return np.block([[zero, v], [v.conj().T, zero]])


def omega_with_residue(triple: GbdtTriple, x: float,
                       state: Optional[GbdtState] = None) -> Tuple[float, float]:
    """omega(x) = -i v~(x) together with the discarded imaginary part."""
    failed = check_realness_hypotheses(triple)
    if failed:
        raise HypothesisError(f"Dirac-Weyl reduction needs: {', '.join(failed)}")
    state = state or eval_state(triple, x)
    value = complex(-1j * potential_from_state(triple, state)[0, 0])
    residue = abs(value.imag)
    scale = max(1.0, norm2(state.Lambda1) * norm2(state.Sinv) * norm2(state.Lambda2))
    if residue > Tolerances.EVALUATION['omega_residue'] * scale:
        raise ConsistencyError(f"omega({x:g}) has imaginary residue {residue:.3e}")
    return value.real, residue


def eval_omega(triple: GbdtTriple, x: float, state: Optional[GbdtState] = None) -> float:
    return omega_with_residue(triple, x, state)[0]


def min_eig_s(triple: GbdtTriple, x: float) -> float:
    return float(np.min(np.linalg.eigvalsh(eval_s(triple, x))))


def monitor_matrices(triple: GbdtTriple, x: float) -> Tuple[np.ndarray, np.ndarray]:
    """R(x) = e^{-ixA} S(x) e^{ixA*} and its companion e^{ixA} S(x) e^{-ixA*}."""
    S = eval_s(triple, x)
    back = mat_exp(-1j * x * triple.A)
    forth = mat_exp(1j * x * triple.A)
    R = back @ S @ back.conj().T
    companion = forth @ S @ forth.conj().T
    return hermitian_part(R), hermitian_part(companion)
