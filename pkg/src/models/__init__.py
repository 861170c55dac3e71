"""
Model Spaces Module
Exact CP-side geometries and validated synthetic non-CP components
"""

from .cp_models import (
    HellingerPoint,
    RayPoint,
    ScalarCB,
    bures_scalar,
    bures_ray,
    hellinger,
    scalar_cb_distance,
    ksw_bounds,
    ksw_check,
    ray_side,
    hellinger_side,
    scalar_side,
)
from .synthetic import (
    SyntheticYSpace,
    RadiusBoundViolation,
    synthetic_radius,
    validate_synthetic,
    shrinking_star,
)
from .counterexample import CounterexampleReport, CounterexampleRow, scalar_counterexample_scenario

__all__ = [
    "HellingerPoint",
    "RayPoint",
    "ScalarCB",
    "bures_scalar",
    "bures_ray",
    "hellinger",
    "scalar_cb_distance",
    "ksw_bounds",
    "ksw_check",
    "ray_side",
    "hellinger_side",
    "scalar_side",
    "SyntheticYSpace",
    "RadiusBoundViolation",
    "synthetic_radius",
    "validate_synthetic",
    "shrinking_star",
    "CounterexampleReport",
    "CounterexampleRow",
    "scalar_counterexample_scenario",
]
