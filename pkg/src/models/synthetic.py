"""
Synthetic Y-Space Module

User-supplied non-CP components. δ_reg is never computed from operator data;
the Y side arrives as a post-snowflake table and is checked against the
radius bound ρ(ψ) <= ‖ψ‖_cb^{1/2}, i.e. r_Y(y) <= λ·‖y‖_cb^{α/2}.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from src.common.config import get_solver_config
from src.common.errors import MetricValidationError
from src.metric.finite_metric import PointedFiniteMetric, check_snowflake_params, star_metric


@dataclass(frozen=True)
class RadiusBoundViolation:
    index: int
    radius: float
    bound: float

    def describe(self) -> str:
        return f"ySide vertex {self.index}: radius {self.radius:.6g} exceeds λ·cbNorm^(α/2) = {self.bound:.6g}"


@dataclass(frozen=True)
class SyntheticYSpace:
    """A pointed post-snowflake Y table with optional per-point cb-norms"""
    pointed_metric: PointedFiniteMetric
    cb_norms: Optional[Tuple[float, ...]] = None

    def __post_init__(self):
        if self.cb_norms is None:
            return
        if len(self.cb_norms) != self.pointed_metric.n:
            raise MetricValidationError(
                f"cbNorms: expected {self.pointed_metric.n} values, got {len(self.cb_norms)}", field="cbNorms"
            )
        for i, v in enumerate(self.cb_norms):
            if v < 0:
                raise MetricValidationError(f"cbNorms: entry {i} is negative ({v})", indices=(i,), field="cbNorms")


def synthetic_radius(cb_norm: float, lambda_: float, alpha: float) -> float:
    """Largest admissible radius λ·cbNorm^{α/2}"""
    check_snowflake_params(lambda_, alpha)
    return lambda_ * cb_norm ** (alpha / 2.0)


def validate_synthetic(space: SyntheticYSpace, lambda_: float, alpha: float,
                       tol: Optional[float] = None) -> List[RadiusBoundViolation]:
    """Every radius that exceeds its cb-norm bound; empty when norms are absent"""
    if space.cb_norms is None:
        return []
    tol = get_solver_config().metric_tol if tol is None else tol
    violations = []
    for i in range(space.pointed_metric.n):
        if i == space.pointed_metric.basepoint:
            continue
        radius = space.pointed_metric.radius(i)
        bound = synthetic_radius(space.cb_norms[i], lambda_, alpha)
        if radius > bound + tol:
            violations.append(RadiusBoundViolation(i, radius, bound))
    return violations


def shrinking_star(cb_norms: Sequence[float], lambda_: float, alpha: float,
                   labels: Optional[Sequence[str]] = None) -> SyntheticYSpace:
    """
    Star-shaped Y space whose radii sit exactly on the cb-norm bound.
    Pairwise distances r_i + r_j always satisfy the triangle inequality.
    """
    radii = [synthetic_radius(v, lambda_, alpha) for v in cb_norms]
    pointed = star_metric(radii, labels)
    return SyntheticYSpace(pointed, (0.0,) + tuple(float(v) for v in cb_norms))
