"""
Acceptance Catalog Module

The reference checks run by `reproduce-paper`: each row rebuilds a known
example or runs a seeded property sweep and reports pass/fail with detail.
"""

import math
import time
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

import numpy as np

from src.common.config import get_solver_config, log
from src.common.errors import WedgeError
from src.common.types import BKParams, ComplexKind, LpExponent
from src.complexes.cech import cech_ambient, cech_intrinsic, sandwich_check
from src.complexes.oracles import (
    BallIntersectionQuery,
    OracleBinding,
    OrthantOracle,
    RayOracle,
    orthant_ball_intersection,
    ray_ball_intersection,
)
from src.complexes.rips import rips
from src.complexes.simplicial import SimplicialComplex
from src.homology.betti import betti, betti_sweep, connected_components
from src.metric.equivalence import anchor_uniform_distance, gh_distortion_bound
from src.metric.finite_metric import FiniteMetric, PointedFiniteMetric, snowflake
from src.metric.wedge import WedgeCloud, cloud_metric, full_distance_table, lp_combine
from src.models.counterexample import scalar_counterexample_scenario
from src.models.cp_models import bures_ray, bures_scalar, hellinger_side, ksw_bounds, ksw_check
from src.wedge.audits import attachment_audit, decomposition_audit
from src.wedge.cech_wedge import cech_wedge_ambient
from src.wedge.rips_wedge import rips_wedge
from src.cli.scenarios import ScenarioId, ScenarioOptions, build_scenario

AUDIT_GRID = [0.0, 0.5, 1.0, 1.5, 2.0, 3.0]
SANDWICH_GRID = [0.25, 0.5, 1.0, 1.5, 2.0]
P_VALUES = [LpExponent.parse(1), LpExponent.parse(2), LpExponent.inf()]
CLOUD_SCENARIOS = [
    ScenarioId.CP_RAY,
    ScenarioId.CP_HELLINGER_DIM2,
    ScenarioId.K22,
    ScenarioId.KMN,
    ScenarioId.MIXED_LOOP,
    ScenarioId.CP_CECH_INTRINSIC_VS_AMBIENT,
    ScenarioId.ATTACHMENT,
]


@dataclass
class RowResult:
    row: int
    title: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def to_json(self) -> dict:
        return {"row": self.row, "title": self.title, "passed": bool(self.passed),
                "detail": self.detail, "seconds": round(self.seconds, 3)}


@dataclass
class AcceptanceRow:
    row: int
    title: str
    check: Callable[[], Tuple[bool, str]]

    def run(self) -> RowResult:
        start = time.perf_counter()
        try:
            passed, detail = self.check()
        except WedgeError as e:
            passed, detail = False, f"{type(e).__name__}: {e}"
        return RowResult(self.row, self.title, passed, detail, time.perf_counter() - start)


# =============================================================================
# RANDOM INPUTS
# =============================================================================

def random_euclidean_metric(rng: np.random.Generator, n: int, dim: int = 2) -> FiniteMetric:
    pts = rng.uniform(0.0, 2.0, size=(n, dim))
    return FiniteMetric.from_points(list(pts), lambda a, b: float(np.linalg.norm(a - b)))


def random_cloud(rng: np.random.Generator, p: LpExponent, max_c: int = 4, max_y: int = 4) -> WedgeCloud:
    """Hellinger CP side, snowflaked Euclidean Y side, random anchor and flags"""
    n_c = int(rng.integers(1, max_c + 1))
    n_y = int(rng.integers(1, max_y + 1))
    c_side = hellinger_side(rng.uniform(0.0, 2.0, size=(n_c, 2)).tolist(), anchor=int(rng.integers(n_c)))
    lam = float(rng.uniform(0.5, 2.0))
    alpha = float(rng.choice([0.3, 0.5, 1.0]))
    y_table = snowflake(random_euclidean_metric(rng, n_y + 1), lam, alpha)
    params = BKParams(lambda_=lam, alpha=alpha, p=p)
    return WedgeCloud(c_side, PointedFiniteMetric(y_table, 0), params, bool(rng.integers(2)))


def scenario_clouds():
    for sid in CLOUD_SCENARIOS:
        spec = build_scenario(sid)
        yield sid, spec, spec.build()


# =============================================================================
# ROWS
# =============================================================================

def _edges(cx: SimplicialComplex) -> set:
    return set(cx.edges())


def row_ray_thresholds() -> Tuple[bool, str]:
    metric = cloud_metric(build_scenario(ScenarioId.CP_RAY).build())
    path = {(0, 1), (1, 2)}
    failures = []
    for t in (0.5, 0.99):
        cx = rips(metric, t)
        if cx.edges():
            failures.append(f"t={t}: expected discrete, got {cx.edges()}")
    for t in (1.0, 1.5, 1.99):
        cx = rips(metric, t)
        if _edges(cx) != path or cx.k_simplices(2):
            failures.append(f"t={t}: expected the path, got {cx.all_simplices()}")
    for t in (2.0, 3.0):
        if not rips(metric, t).same_simplices(SimplicialComplex.full_simplex([0, 1, 2])):
            failures.append(f"t={t}: expected the full 2-simplex")
    return not failures, "; ".join(failures) or "discrete → path x0–x1–x4 → 2-simplex"


def row_hellinger() -> Tuple[bool, str]:
    cloud = build_scenario(ScenarioId.CP_HELLINGER_DIM2).build()
    metric = cloud_metric(cloud)
    expected = {(0, 1): math.sqrt(2.0), (0, 2): 1.0, (1, 2): 1.0}
    for (i, j), d in expected.items():
        if abs(metric.d(i, j) - d) > 1e-12:
            return False, f"d{(i, j)} = {metric.d(i, j)}, expected {d}"
    stages = [(0.99, set()), (1.0, {(0, 2), (1, 2)}), (1.41, {(0, 2), (1, 2)})]
    for t, edges in stages:
        if _edges(rips(metric, t)) != edges:
            return False, f"t={t}: edges {rips(metric, t).edges()}"
    if not rips(metric, math.sqrt(2.0)).is_full_simplex():
        return False, "not a full simplex at √2"
    profile = betti_sweep(cloud, [0.5, 1.0, 1.2, 1.5], ComplexKind.RIPS)
    b1 = [s.betti[1] for s in profile.per_scale]
    b0 = [s.betti[0] for s in profile.per_scale]
    if any(b1) or b0[0] != 3 or b0[-1] != 1:
        return False, f"β0={b0}, β1={b1}"
    return True, f"distances (√2, 1, 1); β0={b0}; β1 ≡ 0"


def row_k22_loop() -> Tuple[bool, str]:
    cloud = build_scenario(ScenarioId.MIXED_LOOP).build()
    cx = rips_wedge(cloud, 1.5)
    cross = {(0, 2), (0, 3), (1, 2), (1, 3)}
    values = betti(rips_wedge(cloud, 1.5, 3))
    ok = _edges(cx) == cross and not cx.k_simplices(2) and values[:2] == [1, 1]
    return ok, f"edges={cx.edges()}, β={values}"


def row_kmn() -> Tuple[bool, str]:
    failures = []
    for m in range(1, 5):
        for n in range(1, 5):
            cloud = build_scenario(ScenarioId.KMN, ScenarioOptions(m=m, n=n)).build()
            cx = rips_wedge(cloud, 1.0, 2)
            values = betti(cx)
            graph_b1 = len(cx.edges()) - len(cx.vertices()) + connected_components(cx)
            if cx.k_simplices(2) or values[1] != (m - 1) * (n - 1) or graph_b1 != values[1]:
                failures.append(f"K{m},{n}: β1={values[1]}, graph={graph_b1}")
    return not failures, "; ".join(failures) or "β1 = (m-1)(n-1) for all (m, n) in {1..4}²"


def row_decomposition(trials: int = 1000) -> Tuple[bool, str]:
    for sid, spec, cloud in scenario_clouds():
        c_binding, y_binding = spec.bindings()
        decomposition_audit(cloud, AUDIT_GRID, c_binding=c_binding, y_binding=y_binding)
    rng = np.random.default_rng(20240517)
    for k in range(trials):
        cloud = random_cloud(rng, P_VALUES[k % 3])
        decomposition_audit(cloud, AUDIT_GRID, check_cech=False)
    return True, f"{len(CLOUD_SCENARIOS)} scenarios and {trials} random clouds × {len(AUDIT_GRID)} scales agree"


def row_cech_intrinsic_vs_ambient() -> Tuple[bool, str]:
    spec = build_scenario(ScenarioId.CP_CECH_INTRINSIC_VS_AMBIENT)
    metric = cloud_metric(spec.build())
    discrete = SimplicialComplex.from_simplices([(0,), (1,), (2,)], 2)
    path = SimplicialComplex.from_simplices([(0, 1), (1, 2)], 2)
    full = SimplicialComplex.full_simplex([0, 1, 2])
    intrinsic = {0.4: discrete, 0.5: discrete, 0.6: discrete, 0.99: discrete, 1.0: full}
    ambient = {0.4: discrete, 0.5: path, 0.6: path, 0.99: path, 1.0: full}
    failures = []
    for t in intrinsic:
        got_i = cech_intrinsic(metric, t, 2)
        got_a = cech_ambient([0.0, 1.0, 4.0], RayOracle(), t, 2)
        if not got_i.same_simplices(intrinsic[t]):
            failures.append(f"intrinsic t={t}: {got_i.all_simplices()}")
        if not got_a.same_simplices(ambient[t]):
            failures.append(f"ambient t={t}: {got_a.all_simplices()}")
    return not failures, "; ".join(failures) or "intrinsic jumps at 1; ambient at 1/2 and 1"


def row_cone_effect() -> Tuple[bool, str]:
    spec = build_scenario(ScenarioId.MIXED_LOOP)
    cloud = spec.build()
    c_binding, y_binding = spec.bindings()
    cech = cech_wedge_ambient(cloud, 1.5, 3, c_binding, y_binding)
    b_cech = betti(cech)
    b_rips = betti(rips_wedge(cloud, 1.5, 3))
    ok = cech.is_full_simplex() and cech.dim == 3 and b_cech[1] == 0 and b_rips[1] == 1
    return ok, f"Čech full 3-simplex={cech.is_full_simplex()}, β1(Čech)={b_cech[1]}, β1(Rips)={b_rips[1]}"


def row_sandwich(trials: int = 500) -> Tuple[bool, str]:
    ambient = {
        ScenarioId.CP_RAY: OracleBinding(RayOracle(), [0.0, 1.0, 4.0]),
        ScenarioId.CP_CECH_INTRINSIC_VS_AMBIENT: OracleBinding(RayOracle(), [0.0, 1.0, 4.0]),
        ScenarioId.CP_HELLINGER_DIM2: OracleBinding(OrthantOracle(2), [(1.0, 0.0), (0.0, 1.0), (1.0, 1.0)]),
    }
    for sid, spec, cloud in scenario_clouds():
        metric = cloud_metric(cloud)
        for t in SANDWICH_GRID:
            if not sandwich_check(metric, t, ambient=ambient.get(sid)):
                return False, f"{sid.value} at t={t}"
    rng = np.random.default_rng(7)
    for k in range(trials):
        metric = random_euclidean_metric(rng, 6, 3)
        t = float(rng.uniform(0.0, 3.0))
        if not sandwich_check(metric, t):
            return False, f"random metric {k} at t={t:.4f}"
    return True, f"scenarios × {SANDWICH_GRID} and {trials} random 6-point metrics"


def row_ksw() -> Tuple[bool, str]:
    grid = np.linspace(0.0, 5.0, 20)
    worst = 0.0
    for c in grid:
        for d in grid:
            for beta in (bures_scalar(c, d), bures_ray(c, d)):
                if not ksw_check(beta, abs(c - d), c, d):
                    return False, f"KSW fails at ({c:.3f}, {d:.3f})"
                lower, _ = ksw_bounds(abs(c - d), c, d)
                if lower is not None:
                    worst = max(worst, abs(lower - beta))
    return worst <= 1e-10, f"both bounds hold on 20×20; lower-bound equality error {worst:.2e}"


def row_anchor_geometry() -> Tuple[bool, str]:
    tol = get_solver_config().metric_tol
    for sid, _, cloud in scenario_clouds():
        for a in range(cloud.n_c):
            other = cloud.with_anchor(a)
            beta = cloud.c_side.metric.d(cloud.anchor, a)
            if anchor_uniform_distance(cloud, other) > beta + tol:
                return False, f"{sid.value}: uniform distance exceeds β for anchor {a}"
            gh_distortion_bound(cloud, other)
    gaps = []
    for p in P_VALUES:
        report = scalar_counterexample_scenario(1.0, 256, 4.0, params=BKParams(p=p))
        gaps.append(report.uniform_anchor_gap)
        if report.uniform_anchor_gap < report.beta_anchors - 0.1 or not report.holds:
            return False, f"p={p}: gap {report.uniform_anchor_gap:.4f} vs β {report.beta_anchors}"
    return True, "pointwise bound holds; ψ_n gaps " + ", ".join(f"{g:.4f}" for g in gaps)


def row_attachment() -> Tuple[bool, str]:
    for eps in (0.1, 0.01):
        for p in P_VALUES:
            cloud = build_scenario(ScenarioId.ATTACHMENT, ScenarioOptions(epsilon=eps, p=p)).build()
            for x in range(cloud.n_c):
                lower, upper = attachment_audit(cloud, x)
                if not (lower <= upper <= lp_combine(lower, eps, p) + 1e-12):
                    return False, f"ε={eps}, p={p}, x={x}: {upper} outside [{lower}, ‖({lower}, {eps})‖]"
    return True, "min cross distance within [r_C, ‖(r_C, ε)‖_p] for ε ∈ {0.1, 0.01}, p ∈ {1, 2, ∞}"


def row_metric_axioms(trials: int = 1000) -> Tuple[bool, str]:
    rng = np.random.default_rng(11)
    for k in range(trials):
        full_distance_table(random_cloud(rng, P_VALUES[k % 3]))
    for alpha in (0.3, 0.5, 1.0):
        for _ in range(50):
            snowflake(random_euclidean_metric(rng, 6, 3), float(rng.uniform(0.5, 2.0)), alpha)
    return True, f"{trials} random wedge tables and snowflakes at α ∈ {{0.3, 0.5, 1}} validate"


def row_orthant_solver(trials: int = 500) -> Tuple[bool, str]:
    rng = np.random.default_rng(3)
    disagreements = 0
    for _ in range(trials):
        m = int(rng.integers(3, 7))
        centers = rng.uniform(0.0, 3.0, size=m)
        radii = rng.uniform(0.0, 1.5, size=m)
        exact = ray_ball_intersection(BallIntersectionQuery(tuple(centers), tuple(radii)))
        solved = orthant_ball_intersection(BallIntersectionQuery(tuple((c,) for c in centers), tuple(radii)))
        if abs(exact.margin) > 1e-7 and exact.feasible != solved.feasible:
            disagreements += 1
    sq = ((1.0, 0.0), (0.0, 1.0), (1.0, 1.0))
    at_one = orthant_ball_intersection(BallIntersectionQuery(sq, (1.0, 1.0, 1.0)))
    at_half = orthant_ball_intersection(BallIntersectionQuery(sq, (0.5, 0.5, 0.5)))
    witness_ok = at_one.witness is not None and all(v >= 0.0 for v in at_one.witness) and all(
        math.dist(at_one.witness, c) <= 1.0 + 1e-9 for c in sq
    )
    ok = disagreements == 0 and at_one.feasible and not at_half.feasible and witness_ok
    return ok, f"{disagreements} disagreements in {trials}; radii 1 → {at_one.status.value}, 0.5 → {at_half.status.value}"


CATALOG: List[AcceptanceRow] = [
    AcceptanceRow(1, "Bures ray Rips thresholds", row_ray_thresholds),
    AcceptanceRow(2, "Hellinger orthant example", row_hellinger),
    AcceptanceRow(3, "K2,2 loop", row_k22_loop),
    AcceptanceRow(4, "K_{m,n} rank formula", row_kmn),
    AcceptanceRow(5, "Rips wedge decomposition", row_decomposition),
    AcceptanceRow(6, "Čech intrinsic vs ambient", row_cech_intrinsic_vs_ambient),
    AcceptanceRow(7, "Cone effect", row_cone_effect),
    AcceptanceRow(8, "Rips/Čech sandwich", row_sandwich),
    AcceptanceRow(9, "KSW inequalities", row_ksw),
    AcceptanceRow(10, "Anchor geometry", row_anchor_geometry),
    AcceptanceRow(11, "Attachment", row_attachment),
    AcceptanceRow(12, "Metric axioms", row_metric_axioms),
    AcceptanceRow(13, "Orthant witness solver", row_orthant_solver),
]


def run_catalog(only: Optional[List[int]] = None) -> List[RowResult]:
    results = []
    for entry in CATALOG:
        if only and entry.row not in only:
            continue
        log("ReproducePaper", f"row {entry.row}: {entry.title}")
        results.append(entry.run())
    return results
