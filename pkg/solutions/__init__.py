"""
Fundamental and dynamical solutions.
"""

from .fundamental import (
    zeta_branch,
    SeedFundamental,
    seed_z_matrix,
    seed_data,
    seed_fundamental,
    transformed_fundamental,
    normalized_fundamental,
    column_split_fundamental,
)
from .dynamical import dynamical_solution, dynamical_column

__all__ = [
    "zeta_branch", "SeedFundamental", "seed_z_matrix", "seed_data", "seed_fundamental",
    "transformed_fundamental", "normalized_fundamental", "column_split_fundamental",
    "dynamical_solution", "dynamical_column",
]
