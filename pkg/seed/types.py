"""
Domain types for seed potentials and GBDT triples.

All matrix-carrying dataclasses are frozen and store read-only arrays so a
triple can be shared freely between evaluations.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple

import numpy as np

from matlin import ShapeError, as_cmatrix, norm2


def _frozen(arr: np.ndarray) -> np.ndarray:
    out = np.array(arr, dtype=complex, copy=True)
    out.setflags(write=False)
    return out


class Kind(Enum):
    SELF_ADJOINT = "self_adjoint"
    SKEW_SELF_ADJOINT = "skew_self_adjoint"


class Branch(Enum):
    """Sign of a square root relative to the principal value"""
    PLUS = "plus"
    MINUS = "minus"

    @property
    def sign(self) -> int:
        return 1 if self is Branch.PLUS else -1


@dataclass(frozen=True)
class SystemKind:
    """Which Dirac system is transformed, and its block size p."""
    kind: Kind
    p: int = 1

    def __post_init__(self):
        if self.p < 1:
            raise ShapeError(f"block size p must be positive, got {self.p}")

    @classmethod
    def self_adjoint(cls, p: int = 1) -> "SystemKind":
        return cls(Kind.SELF_ADJOINT, p)

    @classmethod
    def skew(cls, p: int = 1) -> "SystemKind":
        return cls(Kind.SKEW_SELF_ADJOINT, p)

    @property
    def is_self_adjoint(self) -> bool:
        return self.kind is Kind.SELF_ADJOINT

    @property
    def kappa(self) -> int:
        return 1 if self.is_self_adjoint else 0

    @property
    def modulus_sign(self) -> int:
        """Sign of |a|^2 in Q^2 = (A - cI)^2 -/+ |a|^2 I and in zeta^2."""
        return -1 if self.is_self_adjoint else 1

    @property
    def j(self) -> np.ndarray:
        return np.diag(np.concatenate([np.ones(self.p), -np.ones(self.p)])).astype(complex)

    @property
    def j_kappa(self) -> np.ndarray:
        return self.j if self.kappa == 1 else np.eye(2 * self.p, dtype=complex)

    @property
    def j_kappa_plus_one(self) -> np.ndarray:
        return np.eye(2 * self.p, dtype=complex) if self.kappa == 1 else self.j

    @property
    def label(self) -> str:
        return self.kind.value


@dataclass(frozen=True)
class SeedPotential:
    """v(x) = a e^{2icx} I_p"""
    a: complex
    c: float
    p: int = 1

    def __post_init__(self):
        a = complex(self.a)
        if a == 0:
            raise ShapeError("seed amplitude a must be non-zero")
        c = self.c
        if isinstance(c, complex):
            if c.imag != 0:
                raise ShapeError(f"seed frequency c must be real, got {c}")
            c = c.real
        object.__setattr__(self, 'a', a)
        object.__setattr__(self, 'c', float(c))

    def v(self, x: float) -> np.ndarray:
        return self.a * np.exp(2j * self.c * x) * np.eye(self.p, dtype=complex)

    def potential_matrix(self, x: float) -> np.ndarray:
        """Full 2p x 2p off-diagonal potential [[0, v], [v*, 0]]."""
        v = self.v(x)
        zero = np.zeros((self.p, self.p), dtype=complex)
        return np.block([[zero, v], [v.conj().T, zero]])


@dataclass(frozen=True)
class JordanBlock:
    eigenvalue: complex
    size: int
    branch: Branch = Branch.PLUS


@dataclass(frozen=True, eq=False)
class JordanSpec:
    """A = E J E^{-1} with J block-diagonal Jordan cells."""
    blocks: Tuple[JordanBlock, ...]
    similarity: Optional[np.ndarray] = None

    def __post_init__(self):
        object.__setattr__(self, 'blocks', tuple(self.blocks))
        if not self.blocks or any(b.size < 1 for b in self.blocks):
            raise ShapeError("Jordan blocks must be non-empty with positive sizes")
        if self.similarity is not None:
            E = as_cmatrix(self.similarity, "similarity")
            if E.shape != (self.n, self.n):
                raise ShapeError(f"similarity has shape {E.shape}, expected {(self.n, self.n)}")
            if np.linalg.cond(E) > 1e12:
                raise ShapeError("similarity matrix is not invertible")
            object.__setattr__(self, 'similarity', _frozen(E))

    @property
    def n(self) -> int:
        return sum(b.size for b in self.blocks)

    def jordan_matrix(self) -> np.ndarray:
        J = np.zeros((self.n, self.n), dtype=complex)
        start = 0
        for block in self.blocks:
            for i in range(block.size):
                J[start + i, start + i] = block.eigenvalue
                if i + 1 < block.size:
                    J[start + i, start + i + 1] = 1.0
            start += block.size
        return J

    def matrix(self) -> np.ndarray:
        J = self.jordan_matrix()
        if self.similarity is None:
            return J
        E = np.asarray(self.similarity)
        return np.linalg.solve(E.T, (E @ J).T).T


@dataclass(frozen=True, eq=False)
class SeedRealization:
    Q: np.ndarray
    f1: np.ndarray
    f2: np.ndarray
    f3: np.ndarray
    f4: np.ndarray
    kind: SystemKind
    seed: SeedPotential

    def __post_init__(self):
        for name in ('Q', 'f1', 'f2', 'f3', 'f4'):
            object.__setattr__(self, name, _frozen(getattr(self, name)))
        n = self.Q.shape[0]
        p = self.kind.p
        for name in ('f1', 'f2', 'f3', 'f4'):
            if getattr(self, name).shape != (n, p):
                raise ShapeError(f"{name} has shape {getattr(self, name).shape}, expected {(n, p)}")


@dataclass(frozen=True, eq=False)
class GbdtTriple:
    """The parameter triple {A, S(0), Pi(0)} together with its seed realization."""
    A: np.ndarray
    S0: np.ndarray
    Pi0: np.ndarray
    realization: SeedRealization
    name: str = field(default="triple")

    def __post_init__(self):
        for attr in ('A', 'S0', 'Pi0'):
            object.__setattr__(self, attr, _frozen(getattr(self, attr)))

    @property
    def kind(self) -> SystemKind:
        return self.realization.kind

    @property
    def seed(self) -> SeedPotential:
        return self.realization.seed

    @property
    def n(self) -> int:
        return self.A.shape[0]

    @property
    def p(self) -> int:
        return self.kind.p

    @property
    def Q(self) -> np.ndarray:
        return self.realization.Q

    @property
    def q_norm(self) -> float:
        return norm2(self.realization.Q)

    @property
    def is_trivial(self) -> bool:
        return not np.any(self.Pi0)

    def identity_residual(self, S: np.ndarray, Pi: np.ndarray) -> float:
        """||A S - S A* - i Pi j^kappa Pi*||"""
        lhs = self.A @ S - S @ self.A.conj().T
        rhs = 1j * Pi @ self.kind.j_kappa @ Pi.conj().T
        return norm2(lhs - rhs)
