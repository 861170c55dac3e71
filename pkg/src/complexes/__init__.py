"""
Complexes Module
Rips and Čech complexes over finite metrics and witness oracles
"""

from .simplicial import Simplex, SimplicialComplex, as_simplex, facets, default_max_dim
from .rips import rips, flag_complex, threshold_graph
from .oracles import (
    OracleKind,
    WitnessStatus,
    BallIntersectionQuery,
    WitnessResult,
    WitnessOracle,
    FiniteSetOracle,
    RayOracle,
    OrthantOracle,
    OracleBinding,
    ray_ball_intersection,
    orthant_ball_intersection,
    finite_witness_intersection,
)
from .cech import cech_intrinsic, cech_ambient, grow_complex, sandwich_check, filtration_check

__all__ = [
    "Simplex",
    "SimplicialComplex",
    "as_simplex",
    "facets",
    "default_max_dim",
    "rips",
    "flag_complex",
    "threshold_graph",
    "OracleKind",
    "WitnessStatus",
    "BallIntersectionQuery",
    "WitnessResult",
    "WitnessOracle",
    "FiniteSetOracle",
    "RayOracle",
    "OrthantOracle",
    "OracleBinding",
    "ray_ball_intersection",
    "orthant_ball_intersection",
    "finite_witness_intersection",
    "cech_intrinsic",
    "cech_ambient",
    "grow_complex",
    "sandwich_check",
    "filtration_check",
]
