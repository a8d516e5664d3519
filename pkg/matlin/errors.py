"""
Error hierarchy shared by every engine module.

Library code raises these; the workflow layer catches ``GbdtError`` per step.
"""

from typing import Optional


class GbdtError(Exception):
    """Base class for all engine errors"""


class ShapeError(GbdtError, ValueError):
    """Matrix dimensions are inconsistent"""


class ExponentRangeError(GbdtError, OverflowError):
    """Exponent argument beyond the documented cap"""


class BranchCutError(GbdtError):
    """Eigenvalue on the branch cut of the principal square root"""


class SylvesterSingularityError(GbdtError):
    """Spectra of the two Sylvester coefficients (nearly) intersect"""

    def __init__(self, alpha: complex, beta: complex, message: str = ""):
        self.alpha = alpha
        self.beta = beta
        text = f"shared eigenvalue pair ({alpha:.6g}, {beta:.6g})"
        super().__init__(f"{message}: {text}" if message else text)


class QuadratureError(GbdtError):
    """Adaptive quadrature did not converge"""


class DegenerateSpectrumError(GbdtError):
    """Determinant condition violated for an eigenvalue"""

    def __init__(self, eigenvalue: complex, message: str = ""):
        self.eigenvalue = eigenvalue
        super().__init__(message or f"degenerate spectrum at eigenvalue {eigenvalue:.6g}")


class IdentityResidualError(GbdtError):
    """Matrix identity AS - SA* = i Pi j^kappa Pi* violated"""


class PositivityError(GbdtError):
    """S(x) singular or too ill-conditioned to invert"""


class PoleError(GbdtError):
    """Spectral parameter at a pole"""

    def __init__(self, z: complex, message: str = ""):
        self.z = z
        super().__init__(message or f"pole at z={z:.6g}")


class BranchPointError(GbdtError):
    """zeta(z) vanishes"""


class NormalizationError(GbdtError):
    """Normalized fundamental solution cannot be formed"""


class ConsistencyError(GbdtError):
    """Internal cross-check failed"""


class HypothesisError(GbdtError):
    """Realness hypotheses for the Dirac-Weyl reduction are violated"""


class ScenarioError(GbdtError):
    """Scenario document is invalid"""

    def __init__(self, message: str, field: Optional[str] = None, line: Optional[int] = None):
        self.message = message
        self.field = field
        self.line = line
        where = []
        if field:
            where.append(f"field '{field}'")
        if line is not None:
            where.append(f"line {line}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
