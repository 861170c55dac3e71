"""
Finite Metric Module

Finite point sets with a validated distance table, pointed variants, the
induced sub-metric and the snowflake transform d ↦ λ·d^α.
"""

from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

import numpy as np

from src.common.config import get_solver_config
from src.common.errors import MetricValidationError, ParameterDomainError


def _freeze(table: np.ndarray) -> np.ndarray:
    table = np.array(table, dtype=float, copy=True)
    table.setflags(write=False)
    return table


def validate_table(dist: np.ndarray, tol: Optional[float] = None, field_name: str = "dist") -> None:
    """
    Check the metric axioms on a square table.

    Raises MetricValidationError naming the first offending pair or triple.
    The triangle inequality is checked to an additive tolerance.
    """
    tol = get_solver_config().metric_tol if tol is None else tol

    if dist.ndim != 2 or dist.shape[0] != dist.shape[1]:
        raise MetricValidationError(f"{field_name}: table must be square, got shape {dist.shape}", field=field_name)
    if not np.all(np.isfinite(dist)):
        i, j = (int(v) for v in np.argwhere(~np.isfinite(dist))[0])
        raise MetricValidationError(f"{field_name}: non-finite entry at ({i},{j})", indices=(i, j), field=field_name)

    n = dist.shape[0]
    diag = np.diag(dist)
    if np.any(diag != 0.0):
        i = int(np.flatnonzero(diag != 0.0)[0])
        raise MetricValidationError(f"{field_name}: d({i},{i}) = {diag[i]} must be 0", indices=(i, i), field=field_name)

    asym = np.abs(dist - dist.T) > tol
    if np.any(asym):
        i, j = (int(v) for v in np.argwhere(asym)[0])
        raise MetricValidationError(
            f"{field_name}: asymmetric entries d({i},{j})={dist[i, j]} vs d({j},{i})={dist[j, i]}",
            indices=(i, j), field=field_name,
        )

    off = ~np.eye(n, dtype=bool)
    bad = off & (dist <= 0.0)
    if np.any(bad):
        i, j = (int(v) for v in np.argwhere(bad)[0])
        raise MetricValidationError(
            f"{field_name}: separation fails, d({i},{j}) = {dist[i, j]} for distinct points",
            indices=(i, j), field=field_name,
        )

    # one middle vertex j at a time: slack[i, k] = d(i,j) + d(j,k) - d(i,k)
    for j in range(n):
        slack = dist[:, j][:, None] + dist[j, :][None, :] - dist
        viol = slack < -tol
        if not np.any(viol):
            continue
        i, k = (int(v) for v in np.argwhere(viol)[0])
        raise MetricValidationError(
            f"{field_name}: triangle inequality fails for ({i},{j},{k}): "
            f"d({i},{k})={dist[i, k]} > d({i},{j})+d({j},{k})={dist[i, j] + dist[j, k]}",
            indices=(i, j, k), field=field_name,
        )


@dataclass(frozen=True)
class FiniteMetric:
    """A finite point set with a validated, read-only distance table"""
    dist: np.ndarray
    labels: Tuple[str, ...] = field(default=())

    def __post_init__(self):
        table = _freeze(self.dist)
        object.__setattr__(self, "dist", table)
        labels = tuple(self.labels) if self.labels else tuple(str(i) for i in range(table.shape[0]))
        if len(labels) != table.shape[0]:
            raise MetricValidationError(
                f"labels: expected {table.shape[0]} labels, got {len(labels)}", field="labels"
            )
        object.__setattr__(self, "labels", labels)
        validate_table(table)

    @classmethod
    def from_table(cls, table: Sequence[Sequence[float]], labels: Optional[Sequence[str]] = None) -> "FiniteMetric":
        return cls(np.asarray(table, dtype=float), tuple(labels) if labels else ())

    @classmethod
    def from_points(cls, points: Sequence, metric, labels: Optional[Sequence[str]] = None) -> "FiniteMetric":
        """Tabulate a distance function over a point list"""
        n = len(points)
        table = np.zeros((n, n))
        for i in range(n):
            for j in range(i + 1, n):
                table[i, j] = table[j, i] = metric(points[i], points[j])
        return cls(table, tuple(labels) if labels else ())

    @property
    def n(self) -> int:
        return int(self.dist.shape[0])

    def d(self, i: int, j: int) -> float:
        return float(self.dist[i, j])

    def diameter(self, indices: Sequence[int]) -> float:
        idx = list(indices)
        if len(idx) < 2:
            return 0.0
        return float(self.dist[np.ix_(idx, idx)].max())

    def to_json(self) -> dict:
        return {"labels": list(self.labels), "dist": self.dist.tolist()}

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteMetric):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(self.dist, other.dist)

    def __hash__(self) -> int:
        return hash((self.labels, self.dist.tobytes()))


@dataclass(frozen=True)
class PointedFiniteMetric:
    """A finite metric with a distinguished basepoint"""
    metric: FiniteMetric
    basepoint: int = 0

    def __post_init__(self):
        if not 0 <= self.basepoint < self.metric.n:
            raise MetricValidationError(
                f"basepoint {self.basepoint} out of range for {self.metric.n} points", field="basepoint"
            )

    @property
    def n(self) -> int:
        return self.metric.n

    def radius(self, i: int) -> float:
        """Distance to the basepoint"""
        return self.metric.d(i, self.basepoint)

    def radii(self) -> np.ndarray:
        return np.array(self.metric.dist[:, self.basepoint])


def restrict(metric: FiniteMetric, indices: Sequence[int]) -> FiniteMetric:
    """Induced sub-metric on the given vertices, in the given order"""
    idx = list(indices)
    if len(set(idx)) != len(idx):
        raise MetricValidationError("restrict: duplicate indices", field="indices")
    sub = metric.dist[np.ix_(idx, idx)] if idx else np.zeros((0, 0))
    return FiniteMetric(sub, tuple(metric.labels[i] for i in idx))


def check_snowflake_params(lambda_: float, alpha: float) -> None:
    if not lambda_ > 0:
        raise ParameterDomainError(f"lambda must be > 0, got {lambda_}")
    if not 0 < alpha <= 1:
        raise ParameterDomainError(f"alpha must lie in (0, 1], got {alpha}")


def snowflake(d: FiniteMetric, lambda_: float, alpha: float) -> FiniteMetric:
    """
    Entrywise λ·d^α.

    t ↦ t^α is subadditive for α in (0, 1], so the result is again a metric;
    the constructor re-validates it anyway.
    """
    check_snowflake_params(lambda_, alpha)
    return FiniteMetric(lambda_ * np.power(d.dist, alpha), d.labels)


def star_metric(radii: Sequence[float], labels: Optional[Sequence[str]] = None) -> PointedFiniteMetric:
    """
    Tree metric of a star centred at the basepoint (index 0):
    d(i, *) = r_i and d(i, j) = r_i + r_j.
    """
    r = np.concatenate([[0.0], np.asarray(radii, dtype=float)])
    table = r[:, None] + r[None, :]
    np.fill_diagonal(table, 0.0)
    names = tuple(labels) if labels else tuple(f"y{i}" for i in range(1, len(r)))
    return PointedFiniteMetric(FiniteMetric(table, ("*",) + names), 0)
