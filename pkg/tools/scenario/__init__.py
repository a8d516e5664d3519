"""
Scenario documents: schema, parser and canned examples.
"""

from .schema import GridSpec, Scenario, ScenarioGrids, SUPPORTED_OUTPUTS, scenario_to_dict
from .parser import load_scenario, parse_scenario_text, scenario_from_dict
from .catalog import (
    CATALOG,
    DiracWeylParameters,
    closed_form_columns,
    get_example,
    get_supported_examples,
    scenario_parameters,
)

__all__ = [
    "GridSpec", "Scenario", "ScenarioGrids", "SUPPORTED_OUTPUTS", "scenario_to_dict",
    "load_scenario", "parse_scenario_text", "scenario_from_dict",
    "CATALOG", "DiracWeylParameters", "closed_form_columns", "get_example",
    "get_supported_examples", "scenario_parameters",
]
