"""
Scenario schema: the parsed form of a scenario document.

Complex numbers serialize as ``[re, im]`` pairs, matrices as lists of rows.
``scenario_to_dict`` produces the document form again, so a parsed scenario
round-trips through ``parse_scenario_text``.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from matlin import (
    BranchCutError,
    DegenerateSpectrumError,
    GbdtError,
    IdentityResidualError,
    ScenarioError,
    ShapeError,
    SylvesterSingularityError,
)
from seed import GbdtTriple, JordanSpec, SeedPotential, SystemKind, assemble_triple

SUPPORTED_OUTPUTS = ("profile", "weyl", "dynamical", "verify")


@dataclass(frozen=True)
class GridSpec:
    """Closed interval sampled at ``count`` equispaced points"""
    start: float
    stop: float
    count: int

    def __post_init__(self):
        if self.count < 1:
            raise ScenarioError(f"grid count must be positive, got {self.count}", field="grids")
        if self.count > 1 and not self.stop > self.start:
            raise ScenarioError(f"grid stop {self.stop} must exceed start {self.start}", field="grids")

    def points(self) -> Tuple[float, ...]:
        return tuple(float(x) for x in np.linspace(self.start, self.stop, self.count))


@dataclass(frozen=True)
class ScenarioGrids:
    x: GridSpec = GridSpec(-2.0, 2.0, 101)
    xi: GridSpec = GridSpec(-1.0, 1.0, 20)
    z: Tuple[complex, ...] = ()


@dataclass(frozen=True, eq=False)
class Scenario:
    name: str
    kind: SystemKind
    seed: SeedPotential
    f1: np.ndarray
    f2: np.ndarray
    A: Optional[np.ndarray] = None
    jordan: Optional[JordanSpec] = None
    Q: Optional[np.ndarray] = None
    S0: Optional[np.ndarray] = None
    grids: ScenarioGrids = ScenarioGrids()
    outputs: Tuple[str, ...] = SUPPORTED_OUTPUTS
    checks: Tuple[str, ...] = ()
    parameters: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.A is None and self.jordan is None:
            raise ScenarioError("either A or jordan must be given", field="A")
        if self.jordan is not None and self.Q is not None:
            raise ScenarioError("Q cannot be combined with a Jordan structure", field="Q")
        n = self.jordan.n if self.jordan is not None else self.A.shape[0]
        if self.A is not None and self.A.shape != (n, n):
            raise ScenarioError(f"A has shape {self.A.shape}, expected square {n}x{n}", field="A")
        for name in ("f1", "f2"):
            value = getattr(self, name)
            if value.shape != (n, self.kind.p):
                raise ScenarioError(f"{name} has shape {value.shape}, expected {(n, self.kind.p)}", field=name)
        if self.Q is not None and self.Q.shape != (n, n):
            raise ScenarioError(f"Q has shape {self.Q.shape}, expected {(n, n)}", field="Q")
        if self.S0 is not None and self.S0.shape != (n, n):
            raise ScenarioError(f"S0 has shape {self.S0.shape}, expected {(n, n)}", field="S0")
        unknown = [o for o in self.outputs if o not in SUPPORTED_OUTPUTS]
        if unknown:
            raise ScenarioError(f"unknown outputs {unknown}; supported: {list(SUPPORTED_OUTPUTS)}", field="outputs")

    @property
    def n(self) -> int:
        return self.jordan.n if self.jordan is not None else self.A.shape[0]

    def build_triple(self) -> GbdtTriple:
        """Assemble the triple, naming the scenario field an engine error traces back to."""
        q_source = self.jordan if self.jordan is not None else self.Q
        try:
            return assemble_triple(self.A, q_source, self.f1, self.f2, self.seed, self.kind,
                                   S0=self.S0, name=self.name)
        except (BranchCutError, DegenerateSpectrumError) as exc:
            raise ScenarioError(str(exc), field="jordan" if self.jordan is not None else "A") from exc
        except (SylvesterSingularityError, IdentityResidualError) as exc:
            raise ScenarioError(str(exc), field="S0") from exc
        except ShapeError as exc:
            raise ScenarioError(str(exc), field="f1") from exc
        except GbdtError as exc:
            raise ScenarioError(str(exc), field="seed") from exc


def complex_to_pair(value: complex) -> List[float]:
    value = complex(value)
    return [float(value.real), float(value.imag)]


def matrix_to_rows(M: np.ndarray) -> List[List[List[float]]]:
    return [[complex_to_pair(v) for v in row] for row in np.asarray(M)]


def scenario_to_dict(scenario: Scenario) -> Dict[str, Any]:
    doc: Dict[str, Any] = {
        "name": scenario.name,
        "kind": scenario.kind.label,
        "p": scenario.kind.p,
        "seed": {"a": complex_to_pair(scenario.seed.a), "c": scenario.seed.c},
        "f1": matrix_to_rows(scenario.f1),
        "f2": matrix_to_rows(scenario.f2),
    }
    if scenario.A is not None:
        doc["A"] = matrix_to_rows(scenario.A)
    if scenario.jordan is not None:
        jordan: Dict[str, Any] = {
            "blocks": [
                {"eigenvalue": complex_to_pair(b.eigenvalue), "size": b.size, "branch": b.branch.value}
                for b in scenario.jordan.blocks
            ]
        }
        if scenario.jordan.similarity is not None:
            jordan["similarity"] = matrix_to_rows(scenario.jordan.similarity)
        doc["jordan"] = jordan
    if scenario.Q is not None:
        doc["Q"] = matrix_to_rows(scenario.Q)
    if scenario.S0 is not None:
        doc["S0"] = matrix_to_rows(scenario.S0)
    grids = scenario.grids
    doc["grids"] = {
        "x": {"start": grids.x.start, "stop": grids.x.stop, "count": grids.x.count},
        "xi": {"start": grids.xi.start, "stop": grids.xi.stop, "count": grids.xi.count},
        "z": [complex_to_pair(z) for z in grids.z],
    }
    doc["outputs"] = list(scenario.outputs)
    if scenario.checks:
        doc["checks"] = list(scenario.checks)
    if scenario.parameters:
        doc["parameters"] = dict(scenario.parameters)
    return doc
