"""
Weyl-Titchmarsh and GW functions.
"""

from solutions import zeta_branch
from .realization import WeylRealization, lft_realize, build_realization
from .functions import (
    WeylMethod,
    WeylValue,
    theta,
    y_blocks,
    weyl_via_y,
    weyl_realization,
    half_plane_margin,
    weyl_z_grid,
    membership_coefficients,
    membership_vector,
    gw_bound,
)

__all__ = [
    "zeta_branch", "WeylRealization", "lft_realize", "build_realization", "WeylMethod",
    "WeylValue", "theta", "y_blocks", "weyl_via_y", "weyl_realization", "half_plane_margin",
    "weyl_z_grid", "membership_coefficients", "membership_vector", "gw_bound",
]
