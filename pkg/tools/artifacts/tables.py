"""
Row builders for the profile, Weyl, dynamical and asymptotics tables.
"""

import logging
from typing import Dict, List, Optional, Sequence

import numpy as np

from config_package import GBDT_MEMBERSHIP_X_MAX
from gbdt import eval_state, omega_with_residue, potential_from_state
from seed import GbdtTriple, check_realness_hypotheses, s0_min_eigenvalue
from solutions import dynamical_solution
from tools.scenario import Scenario
from tools.scenario.catalog import (
    closed_form_columns,
    ee_dw0_plateaus,
    ee_dw1_growth_constant,
    scenario_parameters,
)
from verify import membership_partials
from weyl import weyl_via_y, weyl_z_grid
from .csv_writer import Table

logger = logging.getLogger(__name__)


def _entry_names(prefix: str, rows: int, cols: int) -> List[str]:
    return [f"{prefix}_{i + 1}{k + 1}" for i in range(rows) for k in range(cols)]


def profile_columns(triple: GbdtTriple, scenario: Scenario) -> List[str]:
    p, n = triple.p, triple.n
    entries = _entry_names("v", p, p)
    columns = ["x"]
    columns += [f"re_{e}" for e in entries] + [f"im_{e}" for e in entries]
    if not check_realness_hypotheses(triple):
        columns.append("omega")
    columns.append("min_eig_s")
    for i in range(n):
        for k in range(i, n):
            columns.append(f"re_s_{i + 1}{k + 1}")
            if k > i:
                columns.append(f"im_s_{i + 1}{k + 1}")
    columns += list(closed_form_columns(scenario))
    return columns


def profile_table(triple: GbdtTriple, scenario: Scenario) -> Table:
    """x, v~ entries, omega when defined, min eig S(x), S(x) entries, closed forms."""
    table = Table("profile", profile_columns(triple, scenario))
    has_omega = not check_realness_hypotheses(triple)
    closed = closed_form_columns(scenario)
    p, n = triple.p, triple.n
    for x in scenario.grids.x.points():
        state = eval_state(triple, x)
        v = potential_from_state(triple, state)
        row: Dict[str, object] = {"x": x}
        for i in range(p):
            for k in range(p):
                row[f"re_v_{i + 1}{k + 1}"] = float(v[i, k].real)
                row[f"im_v_{i + 1}{k + 1}"] = float(v[i, k].imag)
        if has_omega:
            row["omega"] = omega_with_residue(triple, x, state)[0]
        row["min_eig_s"] = float(np.min(np.linalg.eigvalsh(state.S)))
        for i in range(n):
            for k in range(i, n):
                row[f"re_s_{i + 1}{k + 1}"] = float(state.S[i, k].real)
                if k > i:
                    row[f"im_s_{i + 1}{k + 1}"] = float(state.S[i, k].imag)
        for name, formula in closed.items():
            row[name] = formula(x)
        table.add_row(row)
    return table


def weyl_table(triple: GbdtTriple, z_list: Optional[Sequence[complex]] = None,
               x_max: Optional[float] = None) -> Table:
    """Re z, Im z, phi entries with moduli, truncated membership integral."""
    p = triple.p
    entries = _entry_names("phi", p, p)
    columns = ["re_z", "im_z"]
    columns += [f"re_{e}" for e in entries] + [f"im_{e}" for e in entries] + [f"abs_{e}" for e in entries]
    columns.append("membership_partial")
    table = Table("weyl", columns)
    z_list = list(weyl_z_grid(triple)) if not z_list else list(z_list)
    x_max = GBDT_MEMBERSHIP_X_MAX if x_max is None else x_max
    for z in z_list:
        z = complex(z)
        phi = weyl_via_y(triple, z).phi
        row: Dict[str, object] = {"re_z": z.real, "im_z": z.imag}
        for i in range(p):
            for k in range(p):
                label = f"phi_{i + 1}{k + 1}"
                row[f"re_{label}"] = float(phi[i, k].real)
                row[f"im_{label}"] = float(phi[i, k].imag)
                row[f"abs_{label}"] = float(abs(phi[i, k]))
        row["membership_partial"] = membership_partials(triple, z, phi, x_max)[1][-1]
        table.add_row(row)
    return table


def dynamical_table(triple: GbdtTriple, scenario: Scenario) -> Table:
    """x, xi and |psi(x, xi)| entries (2p x n)."""
    entries = _entry_names("abs_psi", 2 * triple.p, triple.n)
    table = Table("dynamical", ["x", "xi"] + entries)
    for x in scenario.grids.x.points():
        state = eval_state(triple, x)
        for xi in scenario.grids.xi.points():
            psi = np.abs(dynamical_solution(triple, x, xi, state))
            row: Dict[str, object] = {"x": x, "xi": xi}
            for index, name in enumerate(entries):
                row[name] = float(psi.flat[index])
            table.add_row(row)
    return table


def asymptotics_table(triple: GbdtTriple, scenario: Scenario) -> Optional[Table]:
    """Large-|x| samples of omega for the two Dirac-Weyl examples."""
    params = scenario_parameters(scenario)
    if scenario.name == "ee-dw0":
        minus, plus = ee_dw0_plateaus(params)
        table = Table("asymptotics", ["x", "omega", "plateau_expected", "gap"])
        for x, expected in ((-8.0, minus), (8.0, plus)):
            omega = omega_with_residue(triple, x)[0]
            table.add_row({"x": x, "omega": omega, "plateau_expected": expected, "gap": abs(omega - expected)})
        return table
    if scenario.name == "ee-dw1":
        constant = ee_dw1_growth_constant(params)
        table = Table("asymptotics", ["x", "omega", "omega_over_x2", "growth_constant_printed", "omega_minus_r"])
        for x in [-3.0, -2.5, -2.0] + [float(x) for x in np.linspace(10.0, 25.0, 16)]:
            omega = omega_with_residue(triple, x)[0]
            table.add_row({"x": x, "omega": omega, "omega_over_x2": omega / (x * x),
                           "growth_constant_printed": constant, "omega_minus_r": omega - params.r})
        return table
    return None


def weyl_ready(triple: GbdtTriple) -> bool:
    return s0_min_eigenvalue(triple) > 0
