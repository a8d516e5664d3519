"""
Triple assembly: Pi(0) from f1..f4 and S(0) from the matrix identity.
"""

import logging
from dataclasses import replace
from typing import List, Optional, Union

import numpy as np

from config_package import Tolerances
from matlin import (
    IdentityResidualError,
    ShapeError,
    SylvesterSingularityError,
    as_cmatrix,
    hermitian_part,
    norm2,
    solve_sylvester,
)
from .roots import build_q_generic, build_q_jordan, check_root, derive_f34
from .types import GbdtTriple, JordanSpec, SeedPotential, SeedRealization, SystemKind

logger = logging.getLogger(__name__)

QSource = Union[JordanSpec, np.ndarray, None]


def _sylvester_s0(A: np.ndarray, Pi0: np.ndarray, kind: SystemKind) -> np.ndarray:
    rhs = 1j * Pi0 @ kind.j_kappa @ Pi0.conj().T
    try:
        S0 = solve_sylvester(A, A.conj().T, rhs)
    except SylvesterSingularityError as exc:
        raise SylvesterSingularityError(
            exc.alpha, exc.beta,
            "sigma(A) meets sigma(A*); S(0) is not unique, supply S0 explicitly",
        ) from exc
    skew = norm2(S0 - S0.conj().T)
    if skew > Tolerances.CONSTRUCTION['hermitian'] * (1.0 + norm2(S0)) * max(1.0, norm2(A)):
        raise IdentityResidualError(f"computed S(0) is not Hermitian (defect {skew:.3e})")
    return hermitian_part(S0)


def assemble_triple(A, q_source: QSource, f1, f2, seed: SeedPotential, kind: SystemKind,
                    S0=None, name: str = "triple") -> GbdtTriple:
    """
    Build a validated triple {A, S(0), Pi(0)}.

    ``q_source`` selects the commuting root: a ``JordanSpec`` (Toeplitz
    recursion, ``A`` may then be ``None``), an explicit matrix ``Q``, or
    ``None`` for the primary-function path. When ``S0`` is omitted it is the
    unique Hermitian solution of ``A S0 - S0 A* = i Pi0 j^kappa Pi0*``.
    """
    if isinstance(q_source, JordanSpec):
        A = q_source.matrix() if A is None else as_cmatrix(A, "A")
        if norm2(A - q_source.matrix()) > 1e-12 * max(1.0, norm2(A)):
            raise ShapeError("A does not match the Jordan structure")
        Q = build_q_jordan(q_source, seed, kind)
    else:
        A = as_cmatrix(A, "A")
        if q_source is None:
            Q = build_q_generic(A, seed, kind)
        else:
            Q = as_cmatrix(q_source, "Q")
            check_root(A, Q, seed, kind)

    f1 = as_cmatrix(f1, "f1")
    f2 = as_cmatrix(f2, "f2")
    f3, f4 = derive_f34(Q, A, f1, f2, seed, kind)
    realization = SeedRealization(Q=Q, f1=f1, f2=f2, f3=f3, f4=f4, kind=kind, seed=seed)
    Pi0 = np.hstack([f1 + f2, f3 + f4])

    if S0 is None:
        S0 = _sylvester_s0(A, Pi0, kind)
    else:
        S0 = as_cmatrix(S0, "S0")
        n = A.shape[0]
        if S0.shape != (n, n):
            raise ShapeError(f"S0 has shape {S0.shape}, expected {(n, n)}")
        if norm2(S0 - S0.conj().T) > Tolerances.CONSTRUCTION['hermitian'] * (1.0 + norm2(S0)):
            raise IdentityResidualError("supplied S0 is not Hermitian")
        try:
            computed = _sylvester_s0(A, Pi0, kind)
        except SylvesterSingularityError:
            computed = None
        if computed is not None:
            drift = norm2(computed - S0)
            if drift > Tolerances.CONSTRUCTION['supplied_s0_warning'] * (1.0 + norm2(S0)):
                logger.warning(f"⚠️ supplied S0 differs from the Sylvester solution by {drift:.3e}")

    triple = GbdtTriple(A=A, S0=S0, Pi0=Pi0, realization=realization, name=name)
    if not check_realness_hypotheses(triple):
        triple = replace(triple, S0=np.real(triple.S0))
    residual = triple.identity_residual(triple.S0, triple.Pi0)
    if residual > Tolerances.CONSTRUCTION['identity_s0'] * (1.0 + norm2(triple.S0)):
        raise IdentityResidualError(f"identity residual {residual:.3e} at x=0 above tolerance")

    min_eig = float(np.min(np.linalg.eigvalsh(triple.S0)))
    if min_eig > 0:
        logger.info(f"[{name}] ✅ S(0) > 0 (min eigenvalue {min_eig:.6g})")
    else:
        logger.info(f"[{name}] ⚠️ S(0) not positive (min eigenvalue {min_eig:.6g}); Weyl theory does not apply")
    return triple


def s0_min_eigenvalue(triple: GbdtTriple) -> float:
    return float(np.min(np.linalg.eigvalsh(triple.S0)))


def check_realness_hypotheses(triple: GbdtTriple) -> List[str]:
    """
    Conditions under which the skew p=1 transform yields a real Dirac-Weyl potential.

    Returns the names of the failed conditions (empty when all hold).
    """
    tol = Tolerances.CONSTRUCTION['realness']
    failed = []
    if triple.kind.is_self_adjoint:
        failed.append("system kind is skew-self-adjoint")
    if triple.p != 1:
        failed.append("p = 1")
    a = complex(triple.seed.a)
    if abs((1j * a).imag) > tol * max(1.0, abs(a)):
        failed.append("ia real")
    if abs(triple.seed.c) > tol:
        failed.append("c = 0")
    checks = {
        "iA real": 1j * triple.A,
        "iQ real": 1j * triple.Q,
        "S(0) real": triple.S0,
        "f1 real": triple.realization.f1,
        "f2 real": triple.realization.f2,
    }
    for label, M in checks.items():
        if np.max(np.abs(np.imag(M)), initial=0.0) > tol * max(1.0, float(np.max(np.abs(M), initial=0.0))):
            failed.append(label)
    return failed
