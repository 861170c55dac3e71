"""
CP Model Spaces Module

Closed-form Bures geometries: the scalar model CB(C, C), the depolarizing
ray c·Θ and the commutative Hellinger orthant [0, ∞)^n. Each model can be
tabulated into a pointed finite metric anchored at one of its points.
"""

import math
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

from src.common.config import get_solver_config
from src.common.errors import ParameterDomainError
from src.metric.finite_metric import FiniteMetric, PointedFiniteMetric


# =============================================================================
# MODEL POINTS
# =============================================================================

class HellingerPoint(BaseModel):
    """A CP functional on C^n, i.e. a point of the nonnegative orthant"""
    model_config = ConfigDict(frozen=True)

    coords: Tuple[float, ...] = Field(min_length=1)

    @field_validator("coords")
    @classmethod
    def _nonnegative(cls, v):
        for i, c in enumerate(v):
            if not (math.isfinite(c) and c >= 0):
                raise ValueError(f"coordinate {i} must be a finite value >= 0, got {c}")
        return v

    @property
    def dim(self) -> int:
        return len(self.coords)

    def sqrt_coords(self) -> np.ndarray:
        return np.sqrt(np.asarray(self.coords, dtype=float))


class RayPoint(BaseModel):
    """The map Θ_c = c·Θ on the depolarizing ray"""
    model_config = ConfigDict(frozen=True)

    c: float = Field(ge=0.0)

    @property
    def sqrt_coord(self) -> float:
        return math.sqrt(self.c)


class ScalarCB(BaseModel):
    """
    Multiplication by z on C, stored as (re, im).
    CP exactly when im == 0 and re >= 0 on the stored doubles.
    """
    model_config = ConfigDict(frozen=True)

    re: float
    im: float = 0.0

    @classmethod
    def from_complex(cls, z: complex) -> "ScalarCB":
        return cls(re=z.real, im=z.imag)

    @property
    def z(self) -> complex:
        return complex(self.re, self.im)

    @property
    def cb_norm(self) -> float:
        return math.hypot(self.re, self.im)

    @property
    def is_cp(self) -> bool:
        return self.im == 0.0 and self.re >= 0.0


# =============================================================================
# DISTANCES
# =============================================================================

def _require_nonnegative(*values: float) -> None:
    for v in values:
        if v < 0:
            raise ParameterDomainError(f"expected a nonnegative value, got {v}")


def bures_scalar(c1: float, c2: float) -> float:
    """β(φ_c1, φ_c2) = |√c1 - √c2| for scalar CP maps"""
    _require_nonnegative(c1, c2)
    return abs(math.sqrt(c1) - math.sqrt(c2))


def bures_ray(c: float, d: float) -> float:
    """β(Θ_c, Θ_d) on the depolarizing ray; c ↦ √c is an isometry onto [0, ∞)"""
    _require_nonnegative(c, d)
    return abs(math.sqrt(c) - math.sqrt(d))


def hellinger(z: Union[HellingerPoint, Sequence[float]], w: Union[HellingerPoint, Sequence[float]]) -> float:
    """‖√z - √w‖₂ on the orthant"""
    z = z if isinstance(z, HellingerPoint) else HellingerPoint(coords=tuple(z))
    w = w if isinstance(w, HellingerPoint) else HellingerPoint(coords=tuple(w))
    if z.dim != w.dim:
        raise ParameterDomainError(f"dimension mismatch: {z.dim} vs {w.dim}")
    return float(np.linalg.norm(z.sqrt_coords() - w.sqrt_coords()))


def scalar_cb_distance(a: ScalarCB, b: ScalarCB) -> float:
    """‖φ_a - φ_b‖_cb = |a - b|"""
    return abs(a.z - b.z)


def ksw_bounds(cb_diff: float, cb_a: float, cb_b: float) -> Tuple[Optional[float], float]:
    """
    (lower, upper) of the KSW sandwich. The lower bound is None when both
    cb-norms vanish.
    """
    _require_nonnegative(cb_diff, cb_a, cb_b)
    denom = math.sqrt(cb_a) + math.sqrt(cb_b)
    lower = cb_diff / denom if denom > 0 else None
    return lower, math.sqrt(cb_diff)


def ksw_check(beta_val: float, cb_diff: float, cb_a: float, cb_b: float, tol: Optional[float] = None) -> bool:
    """‖φ-ψ‖_cb / (√‖φ‖_cb + √‖ψ‖_cb) <= β <= √‖φ-ψ‖_cb"""
    _require_nonnegative(beta_val)
    tol = get_solver_config().metric_tol if tol is None else tol
    lower, upper = ksw_bounds(cb_diff, cb_a, cb_b)
    if beta_val > upper + tol:
        return False
    return lower is None or lower <= beta_val + tol


# =============================================================================
# POINTED TABLES
# =============================================================================

def _pointed(points: List, metric, anchor: int, labels: Optional[Sequence[str]]) -> PointedFiniteMetric:
    if not 0 <= anchor < len(points):
        raise ParameterDomainError(f"anchor {anchor} out of range for {len(points)} points")
    return PointedFiniteMetric(FiniteMetric.from_points(points, metric, labels), anchor)


def ray_side(cs: Sequence[float], anchor: int = 0, labels: Optional[Sequence[str]] = None) -> PointedFiniteMetric:
    """Pointed ray cloud {Θ_c}; labels default to x<c>"""
    points = [RayPoint(c=c) for c in cs]
    labels = labels or [f"x{c:g}" for c in cs]
    return _pointed(points, lambda a, b: bures_ray(a.c, b.c), anchor, labels)


def hellinger_side(points: Sequence[Sequence[float]], anchor: int = 0,
                   labels: Optional[Sequence[str]] = None) -> PointedFiniteMetric:
    """Pointed orthant cloud under the Hellinger distance"""
    pts = [p if isinstance(p, HellingerPoint) else HellingerPoint(coords=tuple(p)) for p in points]
    dims = {p.dim for p in pts}
    if len(dims) > 1:
        raise ParameterDomainError(f"mixed dimensions in Hellinger cloud: {sorted(dims)}")
    return _pointed(pts, hellinger, anchor, labels)


def scalar_side(zs: Sequence[Union[ScalarCB, complex, float]], anchor: int = 0,
                labels: Optional[Sequence[str]] = None) -> PointedFiniteMetric:
    """Pointed cloud of scalar CP maps; every entry must be CP"""
    points = [z if isinstance(z, ScalarCB) else ScalarCB.from_complex(complex(z)) for z in zs]
    for i, z in enumerate(points):
        if not z.is_cp:
            raise ParameterDomainError(f"scalar point {i} ({z.z}) is not CP and belongs on the Y side")
    labels = labels or [f"phi{z.re:g}" for z in points]
    return _pointed(points, lambda a, b: bures_scalar(a.re, b.re), anchor, labels)
