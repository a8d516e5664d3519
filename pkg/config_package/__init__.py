"""
Configuration package for the GBDT Dirac engine
"""

import os
from dotenv import load_dotenv

# Load environment variables first
load_dotenv()


def _env_float(name: str, default: float) -> float:
    try:
        return float(os.getenv(name, str(default)))
    except (ValueError, TypeError):
        return default


# Output settings
GBDT_OUTPUT_DIR = os.getenv("GBDT_OUTPUT_DIR", "gbdt_outputs")
GBDT_LOG_LEVEL = os.getenv("GBDT_LOG_LEVEL", "INFO")

# Numerical settings
GBDT_RK4_STEP = _env_float("GBDT_RK4_STEP", 1e-3)
GBDT_MEMBERSHIP_X_MAX = _env_float("GBDT_MEMBERSHIP_X_MAX", 20.0)
GBDT_EXP_CAP = _env_float("GBDT_EXP_CAP", 300.0)

from .tolerances import Tolerances

__all__ = [
    "GBDT_OUTPUT_DIR",
    "GBDT_LOG_LEVEL",
    "GBDT_RK4_STEP",
    "GBDT_MEMBERSHIP_X_MAX",
    "GBDT_EXP_CAP",
    "Tolerances",
]
