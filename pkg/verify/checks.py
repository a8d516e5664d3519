"""
Invariant checks. Each returns a ``VerifyReport`` and is deterministic in
(triple, grid).
"""

import logging
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from config_package import GBDT_MEMBERSHIP_X_MAX, Tolerances
from gbdt import (
    SMethod,
    eval_omega,
    eval_pi,
    eval_s,
    eval_state,
    monitor_matrices,
    potential_matrix,
)
from matlin import adaptive_gauss_legendre, norm2
from seed import GbdtTriple, check_realness_hypotheses
from solutions import dynamical_solution, normalized_fundamental, transformed_fundamental, zeta_branch
from weyl import (
    gw_bound,
    membership_coefficients,
    membership_vector,
    weyl_realization,
    weyl_via_y,
)
from .oracle import rk4_integrate, transformed_system
from .report import VerifyReport

logger = logging.getLogger(__name__)

SIGMA_2 = np.array([[0, -1j], [1j, 0]])
SIGMA_3 = np.array([[1, 0], [0, -1]], dtype=complex)


def _describe(values: Sequence[float], label: str) -> str:
    values = list(values)
    if not values:
        return f"{label}:empty"
    return f"{label}[{values[0]:g},{values[-1]:g}]x{len(values)}"


def _worst(residuals: List[Tuple[float, str]]) -> Tuple[float, str]:
    if not residuals:
        return 0.0, "none"
    value, where = max(residuals, key=lambda item: item[0])
    return float(value), where


def check_identity(triple: GbdtTriple, x_grid: Iterable[float],
                   method: SMethod = SMethod.QUADRATURE) -> VerifyReport:
    """A S(x) - S(x) A* = i Pi(x) j^kappa Pi(x)*, relative to 1 + ||S(x)||."""
    x_grid = [float(x) for x in x_grid]
    residuals = []
    per_point = {}
    for x in x_grid:
        S = eval_s(triple, x, method)
        residual = triple.identity_residual(S, np.hstack(eval_pi(triple, x))) / (1.0 + norm2(S))
        per_point[x] = residual
        residuals.append((residual, f"x={x:g}"))
    worst, where = _worst(residuals)
    return VerifyReport("check_identity", _describe(x_grid, "x"), worst,
                        Tolerances.get_threshold('check_identity'), where, {"per_point": per_point})


def check_positivity(triple: GbdtTriple, x_grid: Iterable[float]) -> VerifyReport:
    """
    min eig S(x) > 0 on the kind's domain; for the skew kind also the
    monotone monitors R(x) (non-decreasing, x >= 0) and its companion
    (non-increasing, x <= 0), sampled with the configured step.

    The reported residual is the largest of floor*||S(x)|| - min eig S(x)
    and the relative monitor violations in excess of their tolerance.
    """
    x_grid = [float(x) for x in x_grid]
    if triple.kind.is_self_adjoint:
        x_grid = [x for x in x_grid if x >= 0]
    residuals = []
    min_eigs = {}
    floor = Tolerances.EVALUATION['positivity_floor']
    for x in x_grid:
        S = eval_s(triple, x)
        value = float(np.min(np.linalg.eigvalsh(S)))
        min_eigs[x] = value
        # strict: a vanishing eigenvalue fails
        residuals.append((floor * max(1.0, norm2(S)) - value, f"x={x:g}"))

    monitor_worst = None
    if not triple.kind.is_self_adjoint and x_grid:
        h = Tolerances.STEPS['monitor_h']
        tol = Tolerances.get_threshold('check_monitor')
        lo, hi = min(x_grid), max(x_grid)
        if hi > 0:
            points = np.arange(0.0, hi + 0.5 * h, h)
            previous = monitor_matrices(triple, 0.0)[0]
            for x in points[1:]:
                current = monitor_matrices(triple, float(x))[0]
                drop = -float(np.min(np.linalg.eigvalsh(current - previous))) / max(1.0, norm2(current))
                residuals.append((drop - tol, f"R@x={x:g}"))
                monitor_worst = drop if monitor_worst is None else max(monitor_worst, drop)
                previous = current
        if lo < 0:
            points = np.arange(0.0, lo - 0.5 * h, -h)
            previous = monitor_matrices(triple, 0.0)[1]
            for x in points[1:]:
                current = monitor_matrices(triple, float(x))[1]
                # moving left, the companion must not decrease
                drop = -float(np.min(np.linalg.eigvalsh(current - previous))) / max(1.0, norm2(current))
                residuals.append((drop - tol, f"Q@x={x:g}"))
                monitor_worst = drop if monitor_worst is None else max(monitor_worst, drop)
                previous = current

    worst, where = _worst(residuals)
    details = {"min_eig": min_eigs, "min_eig_overall": min(min_eigs.values()) if min_eigs else None,
               "monitor_worst": monitor_worst}
    return VerifyReport("check_positivity", _describe(x_grid, "x"), worst,
                        Tolerances.get_threshold('check_positivity'), where, details)


def dual_ode_rhs(triple: GbdtTriple, x: float, lambda1: np.ndarray, lambda2: np.ndarray):
    A = triple.A
    v = triple.seed.v(x)
    factor = 1j if triple.kind.is_self_adjoint else 1.0
    d1 = -1j * A @ lambda1 + factor * lambda2 @ v.conj().T
    d2 = 1j * A @ lambda2 - factor * lambda1 @ v
    return d1, d2


def check_dual_ode(triple: GbdtTriple, x_grid: Iterable[float]) -> VerifyReport:
    """Central differences of Lambda1, Lambda2 against the dual equations."""
    h = Tolerances.STEPS['ode_fd']
    x_grid = [float(x) for x in x_grid]
    residuals = []
    for x in x_grid:
        plus1, plus2 = eval_pi(triple, x + h)
        minus1, minus2 = eval_pi(triple, x - h)
        fd1 = (plus1 - minus1) / (2 * h)
        fd2 = (plus2 - minus2) / (2 * h)
        d1, d2 = dual_ode_rhs(triple, x, *eval_pi(triple, x))
        rhs = np.hstack([d1, d2])
        residual = norm2(np.hstack([fd1, fd2]) - rhs) / max(1.0, norm2(rhs))
        residuals.append((residual, f"x={x:g}"))
    worst, where = _worst(residuals)
    return VerifyReport("check_dual_ode", _describe(x_grid, "x"), worst,
                        Tolerances.get_threshold('check_dual_ode'), where)


def pispluss_rhs(triple: GbdtTriple, x: float) -> np.ndarray:
    """Right side of the equation for (Pi* S^{-1})'."""
    state = eval_state(triple, x)
    P = state.Pi.conj().T @ state.Sinv
    j = triple.kind.j
    V = potential_matrix(triple, x, state)
    if triple.kind.is_self_adjoint:
        return 1j * j @ P @ triple.A + 1j * V @ j @ P
    return 1j * j @ P @ triple.A + j @ V @ P


def check_pispluss(triple: GbdtTriple, x_grid: Iterable[float]) -> VerifyReport:
    h = Tolerances.STEPS['ode_fd']
    x_grid = [float(x) for x in x_grid]
    residuals = []
    for x in x_grid:
        plus = eval_state(triple, x + h)
        minus = eval_state(triple, x - h)
        fd = (plus.Pi.conj().T @ plus.Sinv - minus.Pi.conj().T @ minus.Sinv) / (2 * h)
        rhs = pispluss_rhs(triple, x)
        residual = norm2(fd - rhs) / max(1.0, norm2(rhs))
        residuals.append((residual, f"x={x:g}"))
    worst, where = _worst(residuals)
    return VerifyReport("check_pispluss", _describe(x_grid, "x"), worst,
                        Tolerances.get_threshold('check_pispluss'), where)


def check_pde(triple: GbdtTriple, x_grid: Iterable[float], xi_grid: Iterable[float]) -> VerifyReport:
    """
    psi_x + i j (psi_xi + V psi) = 0 (self-adjoint) or
    psi_x + i j (psi_xi + i V psi) = 0 (skew), by central differences.
    When the Dirac-Weyl hypotheses hold, the sigma-matrix form
    psi_x = i s3 (-psi_xi + i omega s2 psi) is checked as well.
    """
    h = Tolerances.STEPS['pde_fd']
    x_grid = [float(x) for x in x_grid]
    xi_grid = [float(xi) for xi in xi_grid]
    j = triple.kind.j
    dirac_weyl = not check_realness_hypotheses(triple)
    residuals = []
    dirac_weyl_worst = 0.0
    for x in x_grid:
        state = eval_state(triple, x)
        plus = eval_state(triple, x + h)
        minus = eval_state(triple, x - h)
        V = potential_matrix(triple, x, state)
        omega = eval_omega(triple, x, state) if dirac_weyl else None
        for xi in xi_grid:
            psi = dynamical_solution(triple, x, xi, state)
            psi_x = (dynamical_solution(triple, x + h, xi, plus) - dynamical_solution(triple, x - h, xi, minus)) / (2 * h)
            psi_xi = (dynamical_solution(triple, x, xi + h, state) - dynamical_solution(triple, x, xi - h, state)) / (2 * h)
            if triple.kind.is_self_adjoint:
                residual = norm2(psi_x + 1j * j @ (psi_xi + V @ psi))
            else:
                residual = norm2(psi_x + 1j * j @ (psi_xi + 1j * V @ psi))
            residuals.append((residual, f"x={x:g},xi={xi:g}"))
            if dirac_weyl:
                form = 1j * SIGMA_3 @ (-psi_xi + 1j * omega * SIGMA_2 @ psi)
                dw = norm2(psi_x - form)
                dirac_weyl_worst = max(dirac_weyl_worst, dw)
                residuals.append((dw, f"dirac_weyl@x={x:g},xi={xi:g}"))
    worst, where = _worst(residuals)
    grid = f"{_describe(x_grid, 'x')};{_describe(xi_grid, 'xi')}"
    return VerifyReport("check_pde", grid, worst, Tolerances.get_threshold('check_pde'), where,
                        {"dirac_weyl": dirac_weyl, "dirac_weyl_worst": dirac_weyl_worst})


def membership_partials(triple: GbdtTriple, z: complex, phi: np.ndarray, x_max: float) -> Tuple[List[float], List[float]]:
    """Window ends and cumulative integrals of ||W(x, z) v||^2 over [0, X]."""
    coefficients = membership_coefficients(triple, z, phi)
    zeta = zeta_branch(z, triple.seed, triple.kind)
    cap = Tolerances.EVALUATION['exp_cap'] / max(triple.q_norm, abs(zeta.imag), 1e-12)
    x_end = min(float(x_max), cap)
    window = Tolerances.STEPS['membership_window']
    count = max(1, int(np.ceil(x_end / window)))
    edges = np.linspace(0.0, x_end, count + 1)

    def integrand(x: float) -> np.ndarray:
        vector = membership_vector(triple, x, z, coefficients)
        return np.array([[np.sum(np.abs(vector) ** 2)]], dtype=complex)

    totals = []
    running = 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        running += float(adaptive_gauss_legendre(integrand, float(lo), float(hi))[0, 0].real)
        totals.append(running)
    return [float(e) for e in edges[1:]], totals


def check_weyl_membership(triple: GbdtTriple, z: complex, x_max: Optional[float] = None,
                          phi: Optional[np.ndarray] = None) -> VerifyReport:
    """
    Truncated membership integral of the Weyl function over [0, X].

    Passes when the partial integrals are non-decreasing and the last window
    adds at most the configured fraction of the total. In the skew kind the
    GW supremum over x <= l must also be finite for l in {1, 5, 10}.
    """
    x_max = GBDT_MEMBERSHIP_X_MAX if x_max is None else x_max
    phi = weyl_via_y(triple, z).phi if phi is None else np.asarray(phi, dtype=complex)
    ends, totals = membership_partials(triple, z, phi, x_max)
    increments = np.diff([0.0] + totals)
    monotone = bool(np.all(increments >= -1e-14 * max(1.0, abs(totals[-1]))))
    tail = float(increments[-1] / totals[-1]) if totals[-1] > 0 else 0.0
    residual = tail if monotone and np.isfinite(tail) else float('inf')

    details = {"ends": ends, "partials": totals, "monotone": monotone, "total": totals[-1]}
    if not triple.kind.is_self_adjoint:
        sups = {ell: gw_bound(triple, z, ell, phi) for ell in (1.0, 5.0, 10.0)}
        details["gw_sup"] = sups
        if not all(np.isfinite(list(sups.values()))):
            residual = float('inf')
    return VerifyReport("check_weyl_membership", f"X={ends[-1]:g};z={complex(z)}", residual,
                        Tolerances.STEPS['membership_tail'], f"X={ends[-1]:g}", details)


def check_oracle(triple: GbdtTriple, z_list: Iterable[complex],
                 x_points: Sequence[float] = (0.5, 1.0, 2.0)) -> VerifyReport:
    """Closed-form u~ and W against RK4 integration of the transformed system."""
    x_points = sorted(float(x) for x in x_points)
    grid = [0.0] + [x for x in x_points if x > 0]
    residuals = []
    for z in z_list:
        system = transformed_system(triple, z)
        start = transformed_fundamental(triple, 0.0, z)
        u_track = rk4_integrate(system, start, grid)
        w_track = rk4_integrate(system, np.eye(2 * triple.p), grid)
        for index, x in enumerate(grid[1:], start=1):
            exact_u = transformed_fundamental(triple, x, z)
            exact_w = normalized_fundamental(triple, x, z)
            ru = norm2(exact_u - u_track[index]) / max(norm2(exact_u), 1e-300)
            rw = norm2(exact_w - w_track[index]) / max(norm2(exact_w), 1e-300)
            residuals.append((ru, f"u~@x={x:g},z={complex(z)}"))
            residuals.append((rw, f"W@x={x:g},z={complex(z)}"))
    worst, where = _worst(residuals)
    return VerifyReport("check_oracle", _describe(grid, "x"), worst,
                        Tolerances.get_threshold('check_oracle'), where)


def check_weyl_routes(triple: GbdtTriple, z_list: Iterable[complex]) -> VerifyReport:
    z_list = list(z_list)
    residuals = []
    for z in z_list:
        by_y = weyl_via_y(triple, z).phi
        by_realization = weyl_realization(triple, z, cross_check=False).phi
        residuals.append((norm2(by_y - by_realization) / max(1.0, norm2(by_y)), f"z={complex(z)}"))
    worst, where = _worst(residuals)
    return VerifyReport("check_weyl_routes", f"z x{len(z_list)}", worst,
                        Tolerances.get_threshold('check_weyl_routes'), where)


def check_herglotz(triple: GbdtTriple, z_list: Iterable[complex]) -> VerifyReport:
    """Im(phi(z)) >= 0 in the self-adjoint kind."""
    z_list = list(z_list)
    residuals = [(-weyl_via_y(triple, z).imaginary_part_min_eig(), f"z={complex(z)}") for z in z_list]
    worst, where = _worst(residuals)
    return VerifyReport("check_herglotz", f"z x{len(z_list)}", worst,
                        Tolerances.get_threshold('check_herglotz'), where)
