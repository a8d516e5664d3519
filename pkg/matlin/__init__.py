"""
Dense complex linear-algebra kernel used by every other package.
"""

from .errors import (
    GbdtError,
    ShapeError,
    ExponentRangeError,
    BranchCutError,
    SylvesterSingularityError,
    QuadratureError,
    DegenerateSpectrumError,
    IdentityResidualError,
    PositivityError,
    PoleError,
    BranchPointError,
    NormalizationError,
    ConsistencyError,
    HypothesisError,
    ScenarioError,
)
from .kernel import as_cmatrix, norm2, hermitian_part, mat_exp, principal_sqrt, solve_sylvester
from .quadrature import gauss_legendre_panel, adaptive_gauss_legendre

__all__ = [
    "GbdtError", "ShapeError", "ExponentRangeError", "BranchCutError",
    "SylvesterSingularityError", "QuadratureError", "DegenerateSpectrumError",
    "IdentityResidualError", "PositivityError", "PoleError", "BranchPointError",
    "NormalizationError", "ConsistencyError", "HypothesisError", "ScenarioError",
    "as_cmatrix", "norm2", "hermitian_part", "mat_exp", "principal_sqrt",
    "solve_sylvester", "gauss_legendre_panel", "adaptive_gauss_legendre",
]
