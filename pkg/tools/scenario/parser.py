"""
Scenario document parser (YAML or JSON).
"""

import json
import re
from pathlib import Path
from typing import Any, Dict, Optional, Union

import numpy as np
import yaml

from matlin import GbdtError, ScenarioError
from seed import Branch, JordanBlock, JordanSpec, Kind, SeedPotential, SystemKind
from .schema import GridSpec, Scenario, ScenarioGrids, SUPPORTED_OUTPUTS

_KIND_ALIASES = {
    "self_adjoint": Kind.SELF_ADJOINT,
    "sa": Kind.SELF_ADJOINT,
    "skew_self_adjoint": Kind.SKEW_SELF_ADJOINT,
    "skew": Kind.SKEW_SELF_ADJOINT,
    "ssa": Kind.SKEW_SELF_ADJOINT,
}


def _locate(text: Optional[str], field: str) -> Optional[int]:
    """1-based line of the first key named ``field`` in the document text."""
    if not text:
        return None
    key = field.split(".")[-1]
    pattern = re.compile(r'^\s*-?\s*["\']?' + re.escape(key) + r'["\']?\s*:')
    for number, line in enumerate(text.splitlines(), start=1):
        if pattern.match(line):
            return number
    return None


class _Reader:
    """Field accessors that raise ScenarioError with field and line."""

    def __init__(self, text: Optional[str]):
        self.text = text

    def fail(self, message: str, field: str) -> ScenarioError:
        return ScenarioError(message, field=field, line=_locate(self.text, field))

    def complex_value(self, value: Any, field: str) -> complex:
        if isinstance(value, bool):
            raise self.fail(f"expected a number or [re, im], got {value!r}", field)
        if isinstance(value, (int, float)):
            return complex(float(value), 0.0)
        if isinstance(value, (list, tuple)) and len(value) == 2 \
                and all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in value):
            return complex(float(value[0]), float(value[1]))
        raise self.fail(f"expected a number or [re, im], got {value!r}", field)

    def matrix(self, value: Any, field: str) -> np.ndarray:
        if not isinstance(value, list) or not value:
            raise self.fail("expected a non-empty list of rows", field)
        rows = []
        for row in value:
            # rows hold entries; a complex entry is an inner [re, im] pair
            entries = row if isinstance(row, list) else [row]
            rows.append([self.complex_value(v, field) for v in entries])
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise self.fail("rows have different lengths", field)
        return np.array(rows, dtype=complex)

    def number(self, value: Any, field: str) -> float:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise self.fail(f"expected a real number, got {value!r}", field)
        return float(value)

    def integer(self, value: Any, field: str) -> int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise self.fail(f"expected an integer, got {value!r}", field)
        return value

    def grid(self, value: Any, field: str, default: GridSpec) -> GridSpec:
        if value is None:
            return default
        if not isinstance(value, dict):
            raise self.fail("expected a mapping with start, stop, count", field)
        try:
            return GridSpec(
                start=self.number(value.get("start", default.start), field),
                stop=self.number(value.get("stop", default.stop), field),
                count=self.integer(value.get("count", default.count), field),
            )
        except ScenarioError as exc:
            if exc.line is None:
                raise self.fail(exc.message, field) from exc
            raise


def scenario_from_dict(doc: Dict[str, Any], text: Optional[str] = None) -> Scenario:
    """Build a Scenario from a parsed document; ``text`` is used for line diagnostics."""
    r = _Reader(text)
    if not isinstance(doc, dict):
        raise ScenarioError("scenario document must be a mapping", line=1)

    name = str(doc.get("name", "scenario"))
    kind_name = str(doc.get("kind", "")).lower()
    if kind_name not in _KIND_ALIASES:
        raise r.fail(f"unknown kind {doc.get('kind')!r}; use self_adjoint or skew_self_adjoint", "kind")
    p = r.integer(doc.get("p", 1), "p")

    seed_doc = doc.get("seed")
    if not isinstance(seed_doc, dict) or "a" not in seed_doc:
        raise r.fail("seed must be a mapping with a and c", "seed")
    try:
        kind = SystemKind(_KIND_ALIASES[kind_name], p)
        seed = SeedPotential(a=r.complex_value(seed_doc["a"], "a"),
                             c=r.number(seed_doc.get("c", 0.0), "c"), p=p)
    except ScenarioError:
        raise
    except GbdtError as exc:
        raise r.fail(str(exc), "seed") from exc

    A = r.matrix(doc["A"], "A") if "A" in doc else None
    jordan = None
    if "jordan" in doc:
        jordan_doc = doc["jordan"]
        if not isinstance(jordan_doc, dict) or not isinstance(jordan_doc.get("blocks"), list):
            raise r.fail("jordan must be a mapping with a blocks list", "jordan")
        blocks = []
        for block in jordan_doc["blocks"]:
            if not isinstance(block, dict):
                raise r.fail("each Jordan block must be a mapping", "blocks")
            branch_name = str(block.get("branch", "plus")).lower()
            try:
                branch = Branch(branch_name)
            except ValueError:
                raise r.fail(f"unknown branch {branch_name!r}; use plus or minus", "branch")
            blocks.append(JordanBlock(
                eigenvalue=r.complex_value(block.get("eigenvalue"), "eigenvalue"),
                size=r.integer(block.get("size", 1), "size"),
                branch=branch,
            ))
        similarity = r.matrix(jordan_doc["similarity"], "similarity") if "similarity" in jordan_doc else None
        try:
            jordan = JordanSpec(blocks=tuple(blocks), similarity=similarity)
        except GbdtError as exc:
            raise r.fail(str(exc), "jordan") from exc

    for required in ("f1", "f2"):
        if required not in doc:
            raise r.fail(f"missing {required}", required)
    f1 = r.matrix(doc["f1"], "f1")
    f2 = r.matrix(doc["f2"], "f2")
    Q = r.matrix(doc["Q"], "Q") if "Q" in doc else None
    S0 = r.matrix(doc["S0"], "S0") if "S0" in doc else None

    grids_doc = doc.get("grids") or {}
    if not isinstance(grids_doc, dict):
        raise r.fail("grids must be a mapping", "grids")
    defaults = ScenarioGrids()
    z_doc = grids_doc.get("z", [])
    if not isinstance(z_doc, list):
        raise r.fail("z must be a list of [re, im] pairs", "z")
    grids = ScenarioGrids(
        x=r.grid(grids_doc.get("x"), "x", defaults.x),
        xi=r.grid(grids_doc.get("xi"), "xi", defaults.xi),
        z=tuple(r.complex_value(z, "z") for z in z_doc),
    )

    outputs = doc.get("outputs", list(SUPPORTED_OUTPUTS))
    checks = doc.get("checks", [])
    if not isinstance(outputs, list) or not isinstance(checks, list):
        raise r.fail("outputs and checks must be lists", "outputs")
    parameters = doc.get("parameters") or {}
    if not isinstance(parameters, dict):
        raise r.fail("parameters must be a mapping", "parameters")

    try:
        return Scenario(
            name=name, kind=kind, seed=seed, f1=f1, f2=f2, A=A, jordan=jordan, Q=Q, S0=S0,
            grids=grids, outputs=tuple(str(o) for o in outputs), checks=tuple(str(c) for c in checks),
            parameters=dict(parameters),
        )
    except ScenarioError as exc:
        if exc.line is None and exc.field:
            raise r.fail(exc.message, exc.field) from exc
        raise


def parse_scenario_text(text: str, suffix: str = ".yaml") -> Scenario:
    """Parse a YAML or JSON scenario document."""
    if suffix.lower() == ".json":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as e:
            raise ScenarioError(f"invalid JSON: {e.msg}", line=e.lineno) from e
    else:
        try:
            doc = yaml.safe_load(text)
        except yaml.YAMLError as e:
            mark = getattr(e, "problem_mark", None)
            raise ScenarioError(f"invalid YAML: {getattr(e, 'problem', e)}",
                                line=mark.line + 1 if mark else None) from e
    return scenario_from_dict(doc, text)


def load_scenario(path: Union[str, Path]) -> Scenario:
    """Read a scenario file through the file processor and parse it."""
    from integrations.file_processing import process_file

    result = process_file(path)
    if not result.get("processed"):
        raise ScenarioError(result.get("error", "unreadable scenario file"))
    return parse_scenario_text(result["content"], result["file_type"])
