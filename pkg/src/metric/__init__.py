"""
Metric Core Module
Finite metrics, the ℓp wedge and the BK distance on mixed clouds
"""

from .finite_metric import (
    FiniteMetric,
    PointedFiniteMetric,
    validate_table,
    restrict,
    snowflake,
    star_metric,
)
from .wedge import (
    WedgeCloud,
    lp_combine,
    wedge_distance,
    full_distance_table,
    scaled_distance_table,
    cloud_metric,
)
from .equivalence import (
    anchor_uniform_distance,
    gh_distortion_bound,
    bilipschitz_constant,
    bilipschitz_check,
    alpha_modulus,
    alpha_modulus_check,
    resnowflake,
)

__all__ = [
    "FiniteMetric",
    "PointedFiniteMetric",
    "validate_table",
    "restrict",
    "snowflake",
    "star_metric",
    "WedgeCloud",
    "lp_combine",
    "wedge_distance",
    "full_distance_table",
    "scaled_distance_table",
    "cloud_metric",
    "anchor_uniform_distance",
    "gh_distortion_bound",
    "bilipschitz_constant",
    "bilipschitz_check",
    "alpha_modulus",
    "alpha_modulus_check",
    "resnowflake",
]
