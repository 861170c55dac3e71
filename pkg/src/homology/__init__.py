"""
Homology Module
Simplicial homology over GF(2) and Betti curves over scale grids
"""

from .boundary import BoundaryMatrix, boundary, gf2_rank, gf2_product
from .betti import (
    BettiScale,
    BettiProfile,
    betti,
    betti_sweep,
    build_complex,
    connected_components,
    euler_characteristic,
    is_contractible_certified,
)

__all__ = [
    "BoundaryMatrix",
    "boundary",
    "gf2_rank",
    "gf2_product",
    "BettiScale",
    "BettiProfile",
    "betti",
    "betti_sweep",
    "build_complex",
    "connected_components",
    "euler_characteristic",
    "is_contractible_certified",
]
