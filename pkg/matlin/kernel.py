"""
Dense complex matrix kernel.

Exponential, principal square root and Sylvester solver, each with the
accuracy contract checked after the scipy call.
"""

import logging
from typing import Any

import numpy as np
import scipy.linalg as spla

from config_package import Tolerances
from .errors import (
    BranchCutError,
    ConsistencyError,
    ExponentRangeError,
    ShapeError,
    SylvesterSingularityError,
)

__all__ = [
    'as_cmatrix', 'norm2', 'mat_exp', 'principal_sqrt', 'solve_sylvester',
    'hermitian_part',
]

logger = logging.getLogger(__name__)


def as_cmatrix(M: Any, name: str = "matrix") -> np.ndarray:
    """Coerce input to a finite 2-D complex array."""
    arr = np.array(M, dtype=complex)
    if arr.ndim == 0:
        arr = arr.reshape(1, 1)
    elif arr.ndim == 1:
        arr = arr.reshape(-1, 1)
    elif arr.ndim != 2:
        raise ShapeError(f"{name} must be 2-D, got ndim={arr.ndim}")
    if not np.all(np.isfinite(arr)):
        raise ShapeError(f"{name} has non-finite entries")
    return arr


def _require_square(M: np.ndarray, name: str) -> None:
    if M.shape[0] != M.shape[1]:
        raise ShapeError(f"{name} must be square, got shape {M.shape}")


def norm2(M: np.ndarray) -> float:
    """Spectral norm; zero for empty input."""
    if M.size == 0:
        return 0.0
    return float(np.linalg.norm(M, 2))


def hermitian_part(M: np.ndarray) -> np.ndarray:
    return 0.5 * (M + M.conj().T)


def mat_exp(M: Any) -> np.ndarray:
    """
    Matrix exponential.

    Parameters
    ----------
    M : (n, n) array_like
        Square complex matrix with spectral norm below the kernel cap.

    Returns
    -------
    E : (n, n) ndarray
        ``exp(M)`` via scipy's scaling-and-squaring Pade scheme.

    Raises
    ------
    ExponentRangeError
        If ``||M||`` exceeds the cap or the result is not finite.
    """
    M = as_cmatrix(M, "exponent")
    _require_square(M, "exponent")
    cap = Tolerances.KERNEL['exp_norm_cap']
    size = norm2(M)
    if size > cap:
        raise ExponentRangeError(f"exponent norm {size:.6g} exceeds cap {cap:g}")
    E = spla.expm(M)
    if not np.all(np.isfinite(E)):
        raise ExponentRangeError(f"exponential of norm-{size:.6g} argument overflowed")
    return np.asarray(E, dtype=complex)


def principal_sqrt(M: Any) -> np.ndarray:
    """
    Principal matrix square root.

    The result is a primary matrix function of ``M`` and therefore commutes
    with every matrix commuting with ``M``.

    Raises
    ------
    BranchCutError
        If an eigenvalue of ``M`` lies on the closed negative real axis.
    """
    M = as_cmatrix(M, "radicand")
    _require_square(M, "radicand")
    scale = max(1.0, norm2(M))
    cut = Tolerances.KERNEL['sqrt_cut'] * scale
    for ev in np.linalg.eigvals(M):
        if abs(ev.imag) <= cut and ev.real <= cut:
            raise BranchCutError(
                f"eigenvalue {ev:.6g} lies on the closed negative real axis; "
                "use the Jordan-recursion root or shift the parameters"
            )
    X = spla.sqrtm(M)
    if isinstance(X, tuple):
        X = X[0]
    X = np.asarray(X, dtype=complex)
    residual = norm2(X @ X - M)
    if residual > Tolerances.KERNEL['sqrt_residual'] * (1.0 + norm2(M)):
        raise ConsistencyError(f"square root residual {residual:.3e} above tolerance")
    return X


def solve_sylvester(A: Any, B: Any, C: Any) -> np.ndarray:
    """
    Solve ``A X - X B = C``.

    Parameters
    ----------
    A : (n, n) array_like
    B : (m, m) array_like
    C : (n, m) array_like

    Returns
    -------
    X : (n, m) ndarray
        Unique solution when the spectra of ``A`` and ``B`` are disjoint.

    Raises
    ------
    SylvesterSingularityError
        If an eigenvalue of ``A`` is within the relative gap tolerance of an
        eigenvalue of ``B``.
    """
    A = as_cmatrix(A, "A")
    B = as_cmatrix(B, "B")
    C = as_cmatrix(C, "C")
    _require_square(A, "A")
    _require_square(B, "B")
    if C.shape != (A.shape[0], B.shape[0]):
        raise ShapeError(f"C has shape {C.shape}, expected {(A.shape[0], B.shape[0])}")

    gap = Tolerances.KERNEL['sylvester_gap']
    for alpha in np.linalg.eigvals(A):
        for beta in np.linalg.eigvals(B):
            if abs(alpha - beta) <= gap * max(1.0, abs(alpha), abs(beta)):
                raise SylvesterSingularityError(alpha, beta, "Sylvester operator is singular")

    # scipy solves A X + X B = Q
    X = np.asarray(spla.solve_sylvester(A, -B, C), dtype=complex)
    residual = norm2(A @ X - X @ B - C)
    if residual > Tolerances.KERNEL['sylvester_residual'] * (1.0 + norm2(C)):
        raise ConsistencyError(f"Sylvester residual {residual:.3e} above tolerance")
    return X
