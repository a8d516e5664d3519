"""
Commuting roots Q and the derived blocks f3, f4.

Q satisfies AQ = QA and Q^2 = (A - cI)^2 -/+ |a|^2 I (minus for the
self-adjoint kind, plus for the skew kind).
"""

import logging
from typing import Tuple

import numpy as np
import scipy.linalg as spla

from config_package import Tolerances
from matlin import (
    BranchCutError,
    ConsistencyError,
    DegenerateSpectrumError,
    ShapeError,
    as_cmatrix,
    norm2,
    principal_sqrt,
)
from .types import Branch, JordanSpec, SeedPotential, SystemKind

logger = logging.getLogger(__name__)


def root_target(A: np.ndarray, seed: SeedPotential, kind: SystemKind) -> np.ndarray:
    """T = (A - cI)^2 -/+ |a|^2 I"""
    n = A.shape[0]
    shifted = A - seed.c * np.eye(n)
    return shifted @ shifted + kind.modulus_sign * abs(seed.a) ** 2 * np.eye(n)


def _scalar_root(t0: complex, branch: Branch) -> complex:
    q0 = np.sqrt(complex(t0))
    # keep the principal value on the cut independent of the sign of a zero imaginary part
    if abs(complex(t0).imag) <= 1e-15 * abs(t0) and q0.imag < 0:
        q0 = -q0
    return branch.sign * q0


def _toeplitz_coefficients(t: np.ndarray, q0: complex) -> np.ndarray:
    """Solve (sum q_i N^i)^2 = sum t_i N^i consecutively for q_1, q_2, ..."""
    m = len(t)
    q = np.zeros(m, dtype=complex)
    q[0] = q0
    for i in range(1, m):
        acc = sum(q[k] * q[i - k] for k in range(1, i))
        q[i] = (t[i] - acc) / (2.0 * q0)
    return q


def check_root(A: np.ndarray, Q: np.ndarray, seed: SeedPotential, kind: SystemKind) -> None:
    tol = Tolerances.CONSTRUCTION['root_relative']
    scale = max(1.0, norm2(A) * norm2(Q))
    commutator = norm2(A @ Q - Q @ A)
    if commutator > tol * scale:
        raise ConsistencyError(f"Q does not commute with A (residual {commutator:.3e})")
    T = root_target(A, seed, kind)
    square = norm2(Q @ Q - T)
    if square > tol * max(1.0, norm2(T)):
        raise ConsistencyError(f"Q^2 misses its target (residual {square:.3e})")


def build_q_jordan(spec: JordanSpec, seed: SeedPotential, kind: SystemKind) -> np.ndarray:
    """
    Commuting root through the Jordan structure of A.

    For a cell lambda I + N of size m, (A - cI)^2 -/+ |a|^2 I equals
    t0 I + t1 N + N^2 with t0 = (lambda - c)^2 -/+ |a|^2 and t1 = 2(lambda - c).
    The root is sought as an upper-triangular Toeplitz matrix sum q_i N^i;
    matching powers of N gives q0^2 = t0 and a linear recursion for q_1, q_2, ...
    """
    tol = Tolerances.CONSTRUCTION['degenerate']
    pieces = []
    for block in spec.blocks:
        shift = complex(block.eigenvalue) - seed.c
        t0 = shift ** 2 + kind.modulus_sign * abs(seed.a) ** 2
        if abs(t0) <= tol * max(1.0, abs(shift) ** 2):
            raise DegenerateSpectrumError(
                block.eigenvalue,
                f"(lambda - c)^2 {'-' if kind.is_self_adjoint else '+'} |a|^2 vanishes "
                f"at lambda={block.eigenvalue:.6g}",
            )
        t = np.zeros(block.size, dtype=complex)
        t[0] = t0
        if block.size > 1:
            t[1] = 2.0 * shift
        if block.size > 2:
            t[2] = 1.0
        q = _toeplitz_coefficients(t, _scalar_root(t0, block.branch))
        first_col = np.zeros(block.size, dtype=complex)
        first_col[0] = q[0]
        pieces.append(spla.toeplitz(first_col, q))

    Q = spla.block_diag(*pieces).astype(complex)
    if spec.similarity is not None:
        E = np.asarray(spec.similarity)
        Q = np.linalg.solve(E.T, (E @ Q).T).T
    check_root(spec.matrix(), Q, seed, kind)
    return Q


def build_q_generic(A, seed: SeedPotential, kind: SystemKind) -> np.ndarray:
    """Commuting root as a primary matrix function of (A - cI)^2 -/+ |a|^2 I."""
    A = as_cmatrix(A, "A")
    if A.shape[0] != A.shape[1]:
        raise ShapeError(f"A must be square, got shape {A.shape}")
    T = root_target(A, seed, kind)
    tol = Tolerances.CONSTRUCTION['degenerate'] * max(1.0, norm2(T))
    for ev in np.linalg.eigvals(T):
        if abs(ev) <= tol:
            raise DegenerateSpectrumError(ev, "root target is singular; determinant condition violated")
    try:
        Q = principal_sqrt(T)
    except BranchCutError:
        logger.debug("root target has spectrum on the cut, trying i*sqrt(-T)")
        try:
            Q = 1j * principal_sqrt(-T)
        except BranchCutError as exc:
            raise BranchCutError(
                f"{exc}; no primary root on either sheet, use build_q_jordan with explicit branches"
            ) from exc
    check_root(A, Q, seed, kind)
    return Q


def derive_f34(Q, A, f1, f2, seed: SeedPotential, kind: SystemKind) -> Tuple[np.ndarray, np.ndarray]:
    """f3 = k (Q + A - cI) f1, f4 = -k (Q - A + cI) f2 with k = 1/conj(a) or i/conj(a)."""
    Q = as_cmatrix(Q, "Q")
    A = as_cmatrix(A, "A")
    f1 = as_cmatrix(f1, "f1")
    f2 = as_cmatrix(f2, "f2")
    n = A.shape[0]
    if Q.shape != (n, n):
        raise ShapeError(f"Q has shape {Q.shape}, expected {(n, n)}")
    for name, f in (("f1", f1), ("f2", f2)):
        if f.shape != (n, kind.p):
            raise ShapeError(f"{name} has shape {f.shape}, expected {(n, kind.p)}")
    factor = 1.0 / np.conj(seed.a)
    if not kind.is_self_adjoint:
        factor = 1j * factor
    shifted = A - seed.c * np.eye(n)
    f3 = factor * (Q + shifted) @ f1
    f4 = -factor * (Q - shifted) @ f2
    return f3, f4
