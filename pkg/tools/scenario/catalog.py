"""
Canned example scenarios and their closed forms.

Both Dirac-Weyl examples use the skew-self-adjoint kind with p=1, c=0 and
a = i r. The parameter mu = sqrt(lambda^2 - r^2) takes the positive branch.
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, Dict, Tuple

import numpy as np

from matlin import ScenarioError
from seed import Branch, JordanBlock, JordanSpec, SeedPotential, SystemKind, s0_min_eigenvalue
from .schema import GridSpec, Scenario, ScenarioGrids

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DiracWeylParameters:
    r: float = 1.0
    lam: float = 2.0
    d: float = 1.0
    b: float = 1.0

    def __post_init__(self):
        if self.r == 0 or self.d == 0:
            raise ScenarioError("r and d must be non-zero", field="parameters")
        if not self.lam > abs(self.r):
            raise ScenarioError(f"lambda={self.lam} must exceed |r|={abs(self.r)}", field="parameters")

    @property
    def mu(self) -> float:
        return math.sqrt(self.lam ** 2 - self.r ** 2)

    @property
    def k(self) -> float:
        """(mu - lambda)^2 / r^2"""
        return (self.mu - self.lam) ** 2 / self.r ** 2

    def header(self, with_b: bool = False) -> Dict[str, float]:
        out = {"r": self.r, "lambda": self.lam, "d": self.d, "mu": self.mu}
        if with_b:
            out["b"] = self.b
        return out


# Scalar steplike example (n = 1)

def ee_dw0_lambda1(params: DiracWeylParameters, x: float) -> float:
    mu = params.mu
    return math.exp(mu * x) + params.d * math.exp(-mu * x)


def ee_dw0_lambda2(params: DiracWeylParameters, x: float) -> complex:
    mu, lam, d, r = params.mu, params.lam, params.d, params.r
    return 1j / r * ((mu - lam) * math.exp(mu * x) - d * (lam + mu) * math.exp(-mu * x))


def ee_dw0_s(params: DiracWeylParameters, x: float) -> float:
    mu, lam, d, r = params.mu, params.lam, params.d, params.r
    grow = (1 + (lam - mu) ** 2 / r ** 2) * math.exp(2 * mu * x)
    decay = d ** 2 * (1 + (lam + mu) ** 2 / r ** 2) * math.exp(-2 * mu * x)
    return (grow + 4 * d + decay) / (2 * lam)


def ee_dw0_omega(params: DiracWeylParameters, x: float) -> float:
    mu, lam, d, r = params.mu, params.lam, params.d, params.r
    numerator = (mu - lam) * math.exp(2 * mu * x) - 2 * d * lam - d ** 2 * (lam + mu) * math.exp(-2 * mu * x)
    return r + 2.0 / r * numerator / ee_dw0_s(params, x)


def ee_dw0_plateaus(params: DiracWeylParameters) -> Tuple[float, float]:
    """(limit at -inf, limit at +inf) for mu > 0."""
    mu, lam, r = params.mu, params.lam, params.r
    plus = r + 4 * r * lam * (mu - lam) / (r ** 2 + (mu - lam) ** 2)
    minus = r - 4 * r * lam * (mu + lam) / (r ** 2 + (mu + lam) ** 2)
    return minus, plus


# Jordan-cell example (n = 2)

def ee_dw1_s_entries(params: DiracWeylParameters, x: float) -> Tuple[float, float, float]:
    """(s11, s12, s22) of S(x)."""
    mu, lam, d, b, k = params.mu, params.lam, params.d, params.b, params.k
    e2 = math.exp(2 * mu * x)
    s22 = (1 + k) * e2 / (2 * lam)
    s12 = (b * lam / mu * (1 + k) * x * e2
           - b * (k * (1 / mu + 1 / (2 * lam)) + 1 / (2 * lam)) * e2
           + 2 * d) / (2 * lam)
    s11 = ((b * lam / mu) ** 2 * (1 + k) * x ** 2 * e2
           - b ** 2 / mu * ((2 * lam / mu + 1) * k + 1) * x * e2
           + b ** 2 * (k * (1 / mu ** 2 + 1 / (lam * mu) + 1 / (2 * lam ** 2)) + 1 / (2 * lam ** 2)) * e2
           + 4 * b * d * lam / mu * x
           - 2 * b * d * (1 / mu + 1 / lam)
           + d ** 2 * (1 + (mu + lam) ** 2 / params.r ** 2) * math.exp(-2 * mu * x)) / (2 * lam)
    return s11, s12, s22


def ee_dw1_det(params: DiracWeylParameters, x: float) -> float:
    mu, lam, d, b, r, k = params.mu, params.lam, params.d, params.b, params.r, params.k
    leading = b ** 2 * ((k ** 2 + 1) / (4 * lam ** 2) + k * (1 / mu ** 2 + 1 / (2 * lam ** 2)))
    middle = 2 * b * d / mu * (k - 1)
    return (leading * math.exp(4 * mu * x) + middle * math.exp(2 * mu * x) + 4 * d ** 2 * mu ** 2 / r ** 2) \
        / (4 * lam ** 2)


def ee_dw1_growth_constant(params: DiracWeylParameters) -> float:
    """Coefficient of x^2 claimed for omega(x) as x -> +inf. Reported only; omega tends to r."""
    mu, lam, r = params.mu, params.lam, params.r
    dl = lam - mu
    numerator = 16 * r * dl * lam ** 5 * (r ** 2 + dl ** 2)
    denominator = mu ** 2 * (dl ** 4 + r ** 4) + 2 * dl ** 2 * r ** 2 * (2 * lam ** 2 + mu ** 2)
    return numerator / denominator


def _column(values) -> np.ndarray:
    return np.array(values, dtype=complex).reshape(-1, 1)


def _grids(x: GridSpec, z_level: float = 5.0) -> ScenarioGrids:
    z = tuple(complex(re, z_level) for re in (-2.0, -1.0, 0.0, 1.0, 2.0))
    return ScenarioGrids(x=x, xi=GridSpec(-1.0, 1.0, 20), z=z)


def ee_dw0(params: DiracWeylParameters = DiracWeylParameters()) -> Scenario:
    return Scenario(
        name="ee-dw0",
        kind=SystemKind.skew(),
        seed=SeedPotential(a=1j * params.r, c=0.0),
        A=np.array([[1j * params.lam]]),
        f1=_column([params.d]),
        f2=_column([1.0]),
        grids=_grids(GridSpec(-2.0, 2.0, 101)),
        parameters=params.header(),
    )


def ee_dw1(params: DiracWeylParameters = DiracWeylParameters()) -> Scenario:
    jordan = JordanSpec(
        blocks=(JordanBlock(1j * params.lam, 2, Branch.PLUS),),
        similarity=np.diag([1.0, 1.0 / (1j * params.b)]),
    )
    return Scenario(
        name="ee-dw1",
        kind=SystemKind.skew(),
        seed=SeedPotential(a=1j * params.r, c=0.0),
        A=jordan.matrix(),
        jordan=jordan,
        f1=_column([params.d, 0.0]),
        f2=_column([0.0, 1.0]),
        grids=_grids(GridSpec(-2.0, 2.0, 101)),
        parameters=params.header(with_b=True),
    )


def trivial_sa() -> Scenario:
    return Scenario(
        name="trivial-sa",
        kind=SystemKind.self_adjoint(),
        seed=SeedPotential(a=1.0, c=0.0),
        A=np.array([[3.0]]),
        f1=_column([0.0]),
        f2=_column([0.0]),
        S0=np.eye(1),
        # |phi| = 1 holds on the imaginary axis
        grids=ScenarioGrids(x=GridSpec(0.0, 2.0, 101), xi=GridSpec(-1.0, 1.0, 20),
                            z=tuple(complex(0.0, level) for level in (3.0, 4.0, 5.0, 6.0, 7.0))),
        parameters={"a": 1.0, "c": 0.0, "A": 3.0},
    )


def trivial_ssa() -> Scenario:
    return Scenario(
        name="trivial-ssa",
        kind=SystemKind.skew(),
        seed=SeedPotential(a=1j, c=0.0),
        A=np.array([[3.0]]),
        f1=_column([0.0]),
        f2=_column([0.0]),
        S0=np.eye(1),
        grids=_grids(GridSpec(-2.0, 2.0, 101)),
        parameters={"a": "i", "c": 0.0, "A": 3.0},
    )


def sa_scalar() -> Scenario:
    """Non-trivial self-adjoint triple with n = 1."""
    return Scenario(
        name="sa-scalar",
        kind=SystemKind.self_adjoint(),
        seed=SeedPotential(a=1.0, c=0.0),
        A=np.array([[1j]]),
        f1=_column([0.1]),
        f2=_column([1.0]),
        grids=_grids(GridSpec(0.0, 2.0, 101)),
        parameters={"a": 1.0, "c": 0.0, "A": "i", "f1": 0.1, "f2": 1.0},
    )


CATALOG: Dict[str, Callable[[], Scenario]] = {
    "ee-dw0": ee_dw0,
    "ee-dw1": ee_dw1,
    "trivial-sa": trivial_sa,
    "trivial-ssa": trivial_ssa,
    "sa-scalar": sa_scalar,
}


def get_example(name: str) -> Scenario:
    """Materialize a canned example; ee-dw1 is refused unless S(0) > 0."""
    key = name.lower()
    if key not in CATALOG:
        raise ScenarioError(f"unknown example {name!r}; available: {sorted(CATALOG)}", field="name")
    scenario = CATALOG[key]()
    if key == "ee-dw1":
        min_eig = s0_min_eigenvalue(scenario.build_triple())
        if not min_eig > 0:
            raise ScenarioError(f"S(0) is not positive (min eigenvalue {min_eig:.6g}); refusing to run",
                                field="parameters")
        logger.info(f"[{key}] ✅ S(0) > 0 verified (min eigenvalue {min_eig:.6g})")
    return scenario


def get_supported_examples() -> list:
    return sorted(CATALOG)


def scenario_parameters(scenario: Scenario) -> DiracWeylParameters:
    values = scenario.parameters
    return DiracWeylParameters(r=float(values.get("r", 1.0)), lam=float(values.get("lambda", 2.0)),
                               d=float(values.get("d", 1.0)), b=float(values.get("b", 1.0)))


def closed_form_columns(scenario: Scenario) -> Dict[str, Callable[[float], float]]:
    """Closed-form profile columns for the Dirac-Weyl examples; empty otherwise."""
    if scenario.name == "ee-dw0":
        params = scenario_parameters(scenario)
        return {
            "s_closed": lambda x: ee_dw0_s(params, x),
            "omega_closed": lambda x: ee_dw0_omega(params, x),
        }
    if scenario.name == "ee-dw1":
        params = scenario_parameters(scenario)
        return {
            "s11_closed": lambda x: ee_dw1_s_entries(params, x)[0],
            "s12_closed": lambda x: ee_dw1_s_entries(params, x)[1],
            "s22_closed": lambda x: ee_dw1_s_entries(params, x)[2],
            "det_closed": lambda x: ee_dw1_det(params, x),
        }
    return {}
