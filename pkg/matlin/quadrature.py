"""
Adaptive composite Gauss-Legendre quadrature for matrix-valued integrands.
"""

from typing import Callable, List, Tuple

import numpy as np

from config_package import Tolerances
from .errors import QuadratureError

__all__ = ['gauss_legendre_panel', 'adaptive_gauss_legendre']


def _nodes(order: int) -> Tuple[np.ndarray, np.ndarray]:
    return np.polynomial.legendre.leggauss(order)


def gauss_legendre_panel(f: Callable[[float], np.ndarray], a: float, b: float,
                         order: int = None) -> np.ndarray:
    """Fixed-order Gauss-Legendre rule on a single panel [a, b]."""
    order = order or Tolerances.EVALUATION['quadrature_nodes']
    t, w = _nodes(order)
    half = 0.5 * (b - a)
    mid = 0.5 * (b + a)
    total = None
    for ti, wi in zip(t, w):
        value = wi * np.asarray(f(mid + half * ti), dtype=complex)
        total = value if total is None else total + value
    return half * total


def adaptive_gauss_legendre(f: Callable[[float], np.ndarray], a: float, b: float,
                            abs_tol: float = None, rel_tol: float = None,
                            max_depth: int = None) -> np.ndarray:
    """
    Integrate ``f`` over ``[a, b]`` by panel bisection.

    Each panel compares the one-panel rule with the two-half-panel rule and is
    accepted when the difference (max-entry) is within its share of
    ``max(abs_tol, rel_tol * |I|)``. Panels are processed left to right so the
    summation order is fixed.

    Raises
    ------
    QuadratureError
        When a panel is still unresolved at ``max_depth`` bisections.
    """
    abs_tol = Tolerances.EVALUATION['quadrature_abs'] if abs_tol is None else abs_tol
    rel_tol = Tolerances.EVALUATION['quadrature_rel'] if rel_tol is None else rel_tol
    max_depth = max_depth or Tolerances.EVALUATION['quadrature_max_depth']

    if a == b:
        return np.zeros_like(np.asarray(f(a), dtype=complex))

    length = abs(b - a)
    coarse = gauss_legendre_panel(f, a, b)
    scale = float(np.max(np.abs(coarse))) if coarse.size else 0.0

    stack: List[Tuple[float, float, np.ndarray, int]] = [(a, b, coarse, 0)]
    total = np.zeros_like(coarse)
    while stack:
        lo, hi, whole, depth = stack.pop()
        mid = 0.5 * (lo + hi)
        left = gauss_legendre_panel(f, lo, mid)
        right = gauss_legendre_panel(f, mid, hi)
        fine = left + right
        error = float(np.max(np.abs(fine - whole))) if fine.size else 0.0
        scale = max(scale, float(np.max(np.abs(fine))) if fine.size else 0.0)
        allowed = max(abs_tol, rel_tol * scale) * abs(hi - lo) / length
        if error <= allowed:
            total = total + fine
            continue
        if depth >= max_depth:
            raise QuadratureError(
                f"no convergence on panel [{lo:.6g}, {hi:.6g}] after {depth} bisections "
                f"(error {error:.3e}, allowed {allowed:.3e})"
            )
        # right pushed first so the left half is summed first
        stack.append((mid, hi, right, depth + 1))
        stack.append((lo, mid, left, depth + 1))
    return total
