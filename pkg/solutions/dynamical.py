"""
Dynamical solutions psi(x, xi) = Pi(x)* S(x)^{-1} e^{-xi A}.
"""

from typing import Optional

import numpy as np

from gbdt import GbdtState, eval_state
from matlin import ShapeError, as_cmatrix, mat_exp
from seed import GbdtTriple


def dynamical_solution(triple: GbdtTriple, x: float, xi: float,
                       state: Optional[GbdtState] = None) -> np.ndarray:
    """2p x n matrix; every column solves the dynamical Dirac system."""
    state = state or eval_state(triple, x)
    return state.Pi.conj().T @ state.Sinv @ mat_exp(-xi * triple.A)


def dynamical_column(triple: GbdtTriple, x: float, xi: float, g) -> np.ndarray:
    """psi(x, xi) g for a constant vector g."""
    g = as_cmatrix(g, "g")
    if g.shape != (triple.n, 1):
        raise ShapeError(f"g has shape {g.shape}, expected {(triple.n, 1)}")
    return dynamical_solution(triple, x, xi) @ g
