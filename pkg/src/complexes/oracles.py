"""
Witness Oracle Module

Decides whether a family of closed balls B̄(c_i, r_i) with per-center radii
has a common point inside a witness domain:

  FINITE_SET  a finite candidate list under a finite metric
  RAY         the Bures ray, isometric to [0, ∞) in sqrt-coordinates
  ORTHANT     the Hellinger orthant, Euclidean [0, ∞)^n in sqrt-coordinates

Exact oracles use interval logic or enumeration. The orthant oracle solves
min_{z >= 0} max_i (‖z - p_i‖ - r_i) by projected subgradient descent
followed by an SLSQP polish, and reports its optimum as a margin.
"""

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from itertools import product
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import minimize

from src.common.config import get_solver_config, log
from src.common.errors import ParameterDomainError
from src.metric.finite_metric import FiniteMetric


# =============================================================================
# VOCABULARIES & RESULTS
# =============================================================================

class OracleKind(Enum):
    FINITE_SET = "finite-set"
    RAY = "ray"
    ORTHANT = "orthant"


class WitnessStatus(Enum):
    FEASIBLE = "feasible"
    BOUNDARY = "boundary"          # |margin| <= tol, resolved as feasible
    INFEASIBLE = "infeasible"
    NON_CONVERGED = "non-converged"


@dataclass(frozen=True)
class BallIntersectionQuery:
    """Centers in some oracle domain with one radius each"""
    centers: Tuple[Any, ...]
    radii: Tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "centers", tuple(self.centers))
        object.__setattr__(self, "radii", tuple(float(r) for r in self.radii))
        if not self.centers:
            raise ParameterDomainError("a ball-intersection query needs at least one center")
        if len(self.radii) != len(self.centers):
            raise ParameterDomainError(f"{len(self.centers)} centers but {len(self.radii)} radii")
        for r in self.radii:
            if not r >= 0:
                raise ParameterDomainError(f"radii must be >= 0, got {r}")

    @classmethod
    def uniform(cls, centers: Sequence[Any], radius: float) -> "BallIntersectionQuery":
        return cls(tuple(centers), tuple(radius for _ in centers))


@dataclass(frozen=True)
class WitnessResult:
    status: WitnessStatus
    witness: Optional[Any] = None
    margin: float = 0.0
    iterations: int = 0

    @property
    def feasible(self) -> bool:
        return self.status in (WitnessStatus.FEASIBLE, WitnessStatus.BOUNDARY)

    @property
    def converged(self) -> bool:
        return self.status != WitnessStatus.NON_CONVERGED


def _classify(margin: float, tol: float) -> WitnessStatus:
    if abs(margin) <= tol:
        return WitnessStatus.BOUNDARY
    return WitnessStatus.FEASIBLE if margin < 0 else WitnessStatus.INFEASIBLE


# =============================================================================
# EXACT ORACLES
# =============================================================================

def ray_ball_intersection(query: BallIntersectionQuery, tol: Optional[float] = None) -> WitnessResult:
    """
    Intervals [p_i - r_i, p_i + r_i] ∩ [0, ∞) on the ray in sqrt-coordinates.

    With lo = max(p_i - r_i) and hi = min(p_i + r_i) the objective is
    max(z - hi, lo - z), minimised at the clamped midpoint.
    """
    tol = get_solver_config().scale_tol if tol is None else tol
    p = np.asarray(query.centers, dtype=float)
    r = np.asarray(query.radii, dtype=float)
    lo = float(np.max(p - r))
    hi = float(np.min(p + r))
    mid = 0.5 * (lo + hi)
    if mid >= 0:
        witness, margin = mid, 0.5 * (lo - hi)
    else:
        witness, margin = 0.0, max(lo, -hi)
    return WitnessResult(_classify(margin, tol), witness, margin)


def finite_witness_intersection(
    query: BallIntersectionQuery,
    candidates: Sequence[Any],
    metric: Callable[[Any, Any], float],
    tol: Optional[float] = None,
) -> WitnessResult:
    """Feasible iff some candidate w has metric(w, c_i) <= r_i for all i"""
    if not candidates:
        raise ParameterDomainError("finite witness search needs at least one candidate")
    tol = get_solver_config().scale_tol if tol is None else tol
    best_w, best = None, math.inf
    for w in candidates:
        slack = max(metric(w, c) - r for c, r in zip(query.centers, query.radii))
        if slack < best:
            best_w, best = w, slack
    return WitnessResult(_classify(best, tol), best_w, best)


# =============================================================================
# ORTHANT SOLVER
# =============================================================================

def _objective(z: np.ndarray, p: np.ndarray, r: np.ndarray) -> float:
    return float(np.max(np.linalg.norm(p - z, axis=1) - r))


def _pairwise_lower_bound(p: np.ndarray, r: np.ndarray) -> float:
    """
    max over pairs of (‖p_i - p_j‖ - r_i - r_j) / 2, and -min r_i.
    Both bound the optimum from below; positive means certified infeasible.
    """
    bound = -float(np.min(r))
    if len(r) > 1:
        d = np.linalg.norm(p[:, None, :] - p[None, :, :], axis=2)
        bound = max(bound, float(np.max((d - r[:, None] - r[None, :]) / 2.0)))
    return bound


def _two_ball_optimum(p: np.ndarray, r: np.ndarray) -> Tuple[np.ndarray, float]:
    """Closed form for two centers: the optimum lies on the segment p0 p1"""
    d = float(np.linalg.norm(p[1] - p[0]))
    if d == 0.0:
        return p[0].copy(), -float(np.min(r))
    a = 0.5 * (d + r[0] - r[1])
    a = min(max(a, 0.0), d)
    z = p[0] + (a / d) * (p[1] - p[0])
    return z, _objective(z, p, r)


def _subgradient(p: np.ndarray, r: np.ndarray, z0: np.ndarray, iters: int,
                 step0: float, lower: float) -> Tuple[np.ndarray, float, int]:
    """
    Projected subgradient with a Polyak step toward the lower bound, capped
    by step0 / sqrt(k + 1). Returns the best iterate.
    """
    z = np.maximum(z0, 0.0)
    best_z, best_f = z.copy(), _objective(z, p, r)
    k = 0
    for k in range(iters):
        diffs = z - p
        norms = np.linalg.norm(diffs, axis=1)
        vals = norms - r
        i = int(np.argmax(vals))
        f = float(vals[i])
        if f < best_f:
            best_z, best_f = z.copy(), f
        if norms[i] == 0.0:
            break
        g = diffs[i] / norms[i]
        step = min(max(f - lower, 0.0), step0 / math.sqrt(k + 1))
        if step == 0.0:
            break
        z = np.maximum(z - step * g, 0.0)
    return best_z, best_f, k + 1


def _polish(p: np.ndarray, r: np.ndarray, z0: np.ndarray, f0: float, max_iter: int):
    """SLSQP on (z, s): minimise s subject to ‖z - p_i‖² <= (r_i + s)², r_i + s >= 0, z >= 0"""
    n = p.shape[1]
    x0 = np.concatenate([z0, [f0]])

    def cons(x):
        z, s = x[:n], x[n]
        return np.concatenate([(r + s) ** 2 - np.sum((z - p) ** 2, axis=1), r + s])

    def cons_jac(x):
        z, s = x[:n], x[n]
        jac_ball = np.hstack([-2.0 * (z - p), 2.0 * (r + s)[:, None]])
        jac_pos = np.hstack([np.zeros_like(p), np.ones((len(r), 1))])
        return np.vstack([jac_ball, jac_pos])

    res = minimize(
        lambda x: x[n],
        x0,
        jac=lambda x: np.concatenate([np.zeros(n), [1.0]]),
        method="SLSQP",
        bounds=[(0.0, None)] * n + [(None, None)],
        constraints=[{"type": "ineq", "fun": cons, "jac": cons_jac}],
        options={"maxiter": max_iter, "ftol": 1e-15},
    )
    z = np.maximum(res.x[:n], 0.0)
    return z, _objective(z, p, r), bool(res.success), int(res.nit)


def orthant_ball_intersection(query: BallIntersectionQuery, tol: Optional[float] = None) -> WitnessResult:
    """
    Feasibility of ∩ B̄(p_i, r_i) ∩ [0, ∞)^n for centers in sqrt-coordinates.

    Multi-start (bounding-box corners of the centers plus their centroid)
    projected subgradient, then an SLSQP polish from the best iterate.
    Infeasibility is accepted when the polish converged, when the pairwise
    bound certifies it, or when the best value matches the lower bound.
    Anything else is NON_CONVERGED.
    """
    config = get_solver_config()
    tol = config.solver_tol if tol is None else tol
    p = np.atleast_2d(np.asarray(query.centers, dtype=float))
    if p.shape[0] != len(query.radii):
        p = p.reshape(len(query.radii), -1)
    r = np.asarray(query.radii, dtype=float)
    if np.any(p < 0):
        raise ParameterDomainError("orthant centers must have nonnegative sqrt-coordinates")

    if len(r) == 1:
        return WitnessResult(_classify(-float(r[0]), tol), p[0].copy(), -float(r[0]))
    if len(r) == 2:
        z, f = _two_ball_optimum(p, r)
        return WitnessResult(_classify(f, tol), z, f)

    lower = _pairwise_lower_bound(p, r)
    lo_box, hi_box = p.min(axis=0), p.max(axis=0)
    starts = [np.array(c, dtype=float) for c in product(*zip(lo_box, hi_box))]
    starts.append(p.mean(axis=0))
    span = float(np.max(hi_box - lo_box)) + float(np.max(r))
    step0 = span if span > 0 else 1.0
    per_start = max(1, min(500, config.max_iter // len(starts)))

    best_z, best_f, used = None, math.inf, 0
    for z0 in starts:
        z, f, k = _subgradient(p, r, z0, per_start, step0, lower)
        used += k
        if f < best_f:
            best_z, best_f = z, f

    z, f, converged, nit = _polish(p, r, best_z, best_f, max(100, min(config.max_iter, 1000)))
    used += nit
    if f < best_f:
        best_z, best_f = z, f

    if best_f <= tol:
        status = _classify(best_f, tol)
    elif lower > tol or converged or best_f - lower <= tol:
        status = WitnessStatus.INFEASIBLE
    else:
        status = WitnessStatus.NON_CONVERGED
        log("OrthantSolver", f"undecided after {used} iterations: best {best_f:.3e}, bound {lower:.3e}")
    return WitnessResult(status, best_z, best_f, used)


# =============================================================================
# ORACLES
# =============================================================================

class WitnessOracle(ABC):
    """
    A witness domain with its own point type. Domain points are integer
    indices (finite set), scalars c >= 0 (ray) or coordinate tuples
    (orthant); distances follow the domain's Bures geometry.
    """
    kind: OracleKind

    @abstractmethod
    def intersect(self, query: BallIntersectionQuery) -> WitnessResult:
        ...

    @abstractmethod
    def distance(self, a: Any, b: Any) -> float:
        ...


class FiniteSetOracle(WitnessOracle):
    kind = OracleKind.FINITE_SET

    def __init__(self, metric: FiniteMetric, candidates: Optional[Sequence[int]] = None):
        self.metric = metric
        self.candidates = list(range(metric.n)) if candidates is None else list(candidates)

    def intersect(self, query: BallIntersectionQuery) -> WitnessResult:
        return finite_witness_intersection(query, self.candidates, self.distance)

    def distance(self, a: int, b: int) -> float:
        return self.metric.d(a, b)


class RayOracle(WitnessOracle):
    kind = OracleKind.RAY

    def intersect(self, query: BallIntersectionQuery) -> WitnessResult:
        sq = BallIntersectionQuery(tuple(math.sqrt(c) for c in query.centers), query.radii)
        result = ray_ball_intersection(sq)
        return WitnessResult(result.status, result.witness ** 2, result.margin, result.iterations)

    def distance(self, a: float, b: float) -> float:
        return abs(math.sqrt(a) - math.sqrt(b))


class OrthantOracle(WitnessOracle):
    kind = OracleKind.ORTHANT

    def __init__(self, dim: int):
        if dim < 1:
            raise ParameterDomainError(f"orthant dimension must be >= 1, got {dim}")
        self.dim = dim

    def _coords(self, point: Any) -> np.ndarray:
        """Validated coordinates of one domain point in [0, ∞)^dim"""
        coords = np.asarray(point, dtype=float)
        if coords.ndim != 1 or coords.shape[0] != self.dim:
            raise ParameterDomainError(f"orthant point {point!r} does not have dimension {self.dim}")
        if np.any(coords < 0):
            raise ParameterDomainError(f"orthant point {point!r} has a negative coordinate")
        return coords

    def intersect(self, query: BallIntersectionQuery) -> WitnessResult:
        sq = BallIntersectionQuery(
            tuple(tuple(float(v) for v in np.sqrt(self._coords(c))) for c in query.centers), query.radii
        )
        result = orthant_ball_intersection(sq)
        witness = None if result.witness is None else tuple(float(v) ** 2 for v in result.witness)
        return WitnessResult(result.status, witness, result.margin, result.iterations)

    def distance(self, a: Sequence[float], b: Sequence[float]) -> float:
        return float(np.linalg.norm(np.sqrt(self._coords(a)) - np.sqrt(self._coords(b))))


@dataclass
class OracleBinding:
    """
    An oracle together with the domain point of each vertex it serves.
    Results are memoised per (vertex set, radii); the cache only ever gains
    entries, so concurrent duplicate computation is harmless.
    """
    oracle: WitnessOracle
    points: List[Any]
    _cache: Dict[Tuple, WitnessResult] = field(default_factory=dict, repr=False)

    @property
    def kind(self) -> OracleKind:
        return self.oracle.kind

    def distance(self, i: int, j: int) -> float:
        return self.oracle.distance(self.points[i], self.points[j])

    def query(self, vertices: Sequence[int], radii: Sequence[float]) -> WitnessResult:
        key = (tuple(vertices), tuple(radii))
        hit = self._cache.get(key)
        if hit is None:
            hit = self.oracle.intersect(BallIntersectionQuery(tuple(self.points[v] for v in vertices), tuple(radii)))
            self._cache[key] = hit
            if hit.status == WitnessStatus.BOUNDARY:
                log("WitnessOracle", f"{self.kind.value}: boundary decision for {tuple(vertices)} (margin {hit.margin:.2e})")
        return hit
