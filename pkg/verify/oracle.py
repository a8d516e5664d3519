"""
Fixed-step RK4 oracle for matrix-valued Dirac systems.
"""

from dataclasses import dataclass, field
from typing import Callable, Dict, Sequence

import numpy as np

from config_package import Tolerances
from gbdt import potential_matrix
from matlin import GbdtError, as_cmatrix
from seed import GbdtTriple, SystemKind


@dataclass
class DiracSystem:
    """
    y' = i(z j + j V(x)) y  (self-adjoint) or  y' = (i z j + j V(x)) y  (skew).

    Potential values are memoized per instance; the cache is never shared
    between systems.
    """
    kind: SystemKind
    potential: Callable[[float], np.ndarray]
    z: complex
    _cache: Dict[float, np.ndarray] = field(default_factory=dict, repr=False)

    def V(self, x: float) -> np.ndarray:
        if x not in self._cache:
            try:
                self._cache[x] = np.asarray(self.potential(x), dtype=complex)
            except GbdtError as exc:
                raise GbdtError(f"potential evaluation failed at x={x:g}: {exc}") from exc
        return self._cache[x]

    def rhs(self, x: float, y: np.ndarray) -> np.ndarray:
        j = self.kind.j
        generator = j @ self.V(x)
        if self.kind.is_self_adjoint:
            generator = 1j * (self.z * j + generator)
        else:
            generator = 1j * self.z * j + generator
        return generator @ y


def seed_system(triple_or_kind, seed=None, z: complex = 0.0) -> DiracSystem:
    """The seed system of a triple, or of an explicit (kind, seed) pair."""
    if isinstance(triple_or_kind, GbdtTriple):
        kind, seed = triple_or_kind.kind, triple_or_kind.seed
    else:
        kind = triple_or_kind
    return DiracSystem(kind=kind, potential=seed.potential_matrix, z=complex(z))


def transformed_system(triple: GbdtTriple, z: complex) -> DiracSystem:
    return DiracSystem(kind=triple.kind, potential=lambda x: potential_matrix(triple, x), z=complex(z))


def rk4_integrate(system: DiracSystem, y0, x_grid: Sequence[float], step: float = None) -> np.ndarray:
    """
    Classical RK4 from x_grid[0] through every grid point.

    Each interval between grid points is split into equal steps no longer than
    ``step``. Local error is O(h^5). Returns an array of shape
    (len(x_grid), *y0.shape).
    """
    step = step or Tolerances.STEPS['rk4']
    y = as_cmatrix(y0, "y0")
    grid = [float(x) for x in x_grid]
    trajectory = [y]
    for start, stop in zip(grid[:-1], grid[1:]):
        count = max(1, int(np.ceil(abs(stop - start) / step - 1e-12)))
        h = (stop - start) / count
        x = start
        for k in range(count):
            x = start + k * h
            k1 = system.rhs(x, y)
            k2 = system.rhs(x + h / 2, y + h / 2 * k1)
            k3 = system.rhs(x + h / 2, y + h / 2 * k2)
            k4 = system.rhs(x + h, y + h * k3)
            y = y + (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4)
        trajectory.append(y)
    return np.stack(trajectory)
