"""
ℓp Wedge Module

The ℓp combination rule, mixed CP / non-CP clouds glued at anchor θ ∼ ∗,
and the four-case BK distance on them.

Merged vertex numbering used throughout: CP vertices keep their indices
0..nC-1 (the anchor's index stands for the glued point), then the non-basepoint
Y vertices follow in their Y order.
"""

import math
from dataclasses import dataclass, field, replace
from typing import List, Union

import numpy as np

from src.common.errors import MetricValidationError, ParameterDomainError
from src.common.types import BKParams, LpExponent, Side, WedgePoint
from src.metric.finite_metric import FiniteMetric, PointedFiniteMetric, restrict


def lp_combine(a: float, b: float, p: Union[LpExponent, float, str]) -> float:
    """
    ℓp norm of the pair (a, b): (a^p + b^p)^(1/p), or max(a, b) for p = INF.
    """
    if a < 0 or b < 0:
        raise ParameterDomainError(f"lp_combine needs nonnegative arguments, got ({a}, {b})")
    p = LpExponent.parse(p)
    if p.is_inf:
        return max(a, b)
    exp = float(p.value)
    if exp == 1.0:
        return a + b
    if exp == 2.0:
        return math.hypot(a, b)
    m = max(a, b)
    if m == 0.0:
        return 0.0
    return m * ((a / m) ** exp + (b / m) ** exp) ** (1.0 / exp)


def lp_combine_array(a: np.ndarray, b: np.ndarray, p: LpExponent) -> np.ndarray:
    """Vectorised lp_combine for broadcastable nonnegative arrays"""
    a, b = np.broadcast_arrays(np.asarray(a, dtype=float), np.asarray(b, dtype=float))
    if p.is_inf:
        return np.maximum(a, b)
    exp = float(p.value)
    if exp == 1.0:
        return a + b
    if exp == 2.0:
        return np.hypot(a, b)
    m = np.maximum(a, b)
    safe = np.where(m > 0, m, 1.0)
    out = safe * ((a / safe) ** exp + (b / safe) ** exp) ** (1.0 / exp)
    return np.where(m > 0, out, 0.0)


@dataclass(frozen=True)
class WedgeCloud:
    """
    A mixed cloud of CP-side and Y-side points.

    c_side is pointed at the anchor θ, y_side at ∗. Y-side distances are
    stored post-snowflake, i.e. they already equal d_reg = λ·δ_reg^α.
    include_basepoint decides whether the glued point θ ∼ ∗ is a vertex of
    the cloud used for complexes.
    """
    c_side: PointedFiniteMetric
    y_side: PointedFiniteMetric
    params: BKParams = field(default_factory=BKParams)
    include_basepoint: bool = True

    def __post_init__(self):
        radii = self.y_side.radii()
        for j in range(self.y_side.n):
            if j != self.y_side.basepoint and not radii[j] > 0:
                raise MetricValidationError(
                    f"ySide: radius of vertex {j} must be > 0, got {radii[j]}", indices=(j,), field="ySide"
                )

    # ── Indexing ──────────────────────────────────────────────────────────

    @property
    def anchor(self) -> int:
        return self.c_side.basepoint

    @property
    def n_c(self) -> int:
        return self.c_side.n

    def y_vertices(self) -> List[int]:
        """Y indices other than ∗, in order"""
        return [j for j in range(self.y_side.n) if j != self.y_side.basepoint]

    @property
    def n_merged(self) -> int:
        return self.c_side.n + self.y_side.n - 1

    def merged_index(self, point: WedgePoint) -> int:
        self._check(point)
        if point.side == Side.C:
            return point.index
        if point.index == self.y_side.basepoint:
            return self.anchor
        return self.n_c + self.y_vertices().index(point.index)

    def merged_point(self, index: int) -> WedgePoint:
        if not 0 <= index < self.n_merged:
            raise IndexError(f"merged index {index} out of range")
        if index < self.n_c:
            return WedgePoint.c(index)
        return WedgePoint.y(self.y_vertices()[index - self.n_c])

    def cloud_indices(self) -> List[int]:
        """Merged indices of the cloud vertices"""
        return [i for i in range(self.n_merged) if self.include_basepoint or i != self.anchor]

    def cloud_points(self) -> List[WedgePoint]:
        return [self.merged_point(i) for i in self.cloud_indices()]

    def merged_labels(self) -> List[str]:
        c_labels = list(self.c_side.metric.labels)
        y_labels = [self.y_side.metric.labels[j] for j in self.y_vertices()]
        return c_labels + y_labels

    def canonical(self, point: WedgePoint) -> WedgePoint:
        """Map ∗ onto θ so the two basepoints compare equal"""
        self._check(point)
        if point.side == Side.Y and point.index == self.y_side.basepoint:
            return WedgePoint.c(self.anchor)
        return point

    def same_point(self, x: WedgePoint, y: WedgePoint) -> bool:
        return self.canonical(x) == self.canonical(y)

    # ── Radial functions ──────────────────────────────────────────────────

    def r_c(self, i: int) -> float:
        """β(x_i, θ)"""
        return self.c_side.radius(i)

    def r_y(self, j: int) -> float:
        """d_reg(y_j, ∗)"""
        return self.y_side.radius(j)

    # ── Derivations ───────────────────────────────────────────────────────

    def with_anchor(self, anchor: int) -> "WedgeCloud":
        return replace(self, c_side=PointedFiniteMetric(self.c_side.metric, anchor))

    def with_params(self, params: BKParams) -> "WedgeCloud":
        return replace(self, params=params)

    def _check(self, point: WedgePoint) -> None:
        n = self.c_side.n if point.side == Side.C else self.y_side.n
        if point.index >= n:
            raise IndexError(f"{point.side.value}-side index {point.index} out of range ({n} points)")


def wedge_distance(cloud: WedgeCloud, x: WedgePoint, y: WedgePoint) -> float:
    """
    BK distance between two wedge points.

    Same side: the component distance. Cross side: the ℓp combination of
    the two radii, ‖(r_C(x), r_Y(y))‖_p.
    """
    x, y = cloud.canonical(x), cloud.canonical(y)
    if x.side == y.side:
        side = cloud.c_side if x.side == Side.C else cloud.y_side
        return side.metric.d(x.index, y.index)
    if x.side == Side.Y:
        x, y = y, x
    return lp_combine(cloud.r_c(x.index), cloud.r_y(y.index), cloud.params.p)


def _merged_table(cloud: WedgeCloud, p: LpExponent, y_scale: float = 1.0) -> np.ndarray:
    n_c = cloud.n_c
    ys = cloud.y_vertices()
    n = cloud.n_merged
    table = np.zeros((n, n))
    table[:n_c, :n_c] = cloud.c_side.metric.dist
    if ys:
        table[n_c:, n_c:] = y_scale * cloud.y_side.metric.dist[np.ix_(ys, ys)]
        r_c = cloud.c_side.radii()
        r_y = y_scale * cloud.y_side.radii()[ys]
        cross = lp_combine_array(r_c[:, None], r_y[None, :], p)
        table[:n_c, n_c:] = cross
        table[n_c:, :n_c] = cross.T
    return table


def full_distance_table(cloud: WedgeCloud) -> FiniteMetric:
    """
    Complete table over all wedge points with the basepoints merged.

    Construction validates the metric axioms, which is the executable form
    of the ℓp-wedge being a metric; a failure points at a bad component.
    """
    return FiniteMetric(_merged_table(cloud, cloud.params.p), tuple(cloud.merged_labels()))


def scaled_distance_table(cloud: WedgeCloud, p: LpExponent, lambda_: float) -> np.ndarray:
    """
    Merged table for the same cloud under exponent p and scale λ; the stored
    Y distances are rescaled by λ / cloud.params.lambda_.
    """
    return _merged_table(cloud, LpExponent.parse(p), lambda_ / cloud.params.lambda_)


def cloud_metric(cloud: WedgeCloud) -> FiniteMetric:
    """The merged table restricted to the cloud vertices"""
    return restrict(full_distance_table(cloud), cloud.cloud_indices())
