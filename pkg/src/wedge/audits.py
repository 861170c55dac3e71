"""
Wedge Audit Module

Brute-force cross-checks of the structural formulas: the assembled Rips
wedge against plain Rips on the merged table, the Rips/Čech sandwich, the
cross-edge rule, and the distance from a CP point to the Y side.
"""

from dataclasses import asdict, dataclass, field
from typing import List, Optional, Sequence, Tuple

from src.common.config import get_solver_config, log
from src.common.errors import AuditFailure, ParameterDomainError
from src.common.types import WedgePoint
from src.complexes.cech import sandwich_check
from src.complexes.oracles import OracleBinding
from src.complexes.rips import rips
from src.complexes.simplicial import default_max_dim
from src.metric.wedge import WedgeCloud, cloud_metric, lp_combine, wedge_distance
from src.wedge.cech_wedge import cech_wedge_ambient
from src.wedge.radial import local_sides, radial_profile
from src.wedge.rips_wedge import rips_wedge


@dataclass
class AuditRow:
    t: float
    rips_match: bool
    sandwich: bool
    cross_edges: bool
    cech_sandwich: Optional[bool]
    n_simplices: int


@dataclass
class DecompositionReport:
    rows: List[AuditRow] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.rips_match and r.sandwich and r.cross_edges and r.cech_sandwich is not False
                   for r in self.rows)

    def to_json(self) -> List[dict]:
        return [asdict(r) for r in self.rows]


def _fail(message: str, simplex=None, t: Optional[float] = None):
    log("DecompositionAudit", message)
    raise AuditFailure(message, simplex=tuple(simplex) if simplex is not None else None, scale=t)


def decomposition_audit(
    cloud: WedgeCloud,
    t_grid: Sequence[float],
    max_dim: Optional[int] = None,
    c_binding: Optional[OracleBinding] = None,
    y_binding: Optional[OracleBinding] = None,
    check_cech: bool = True,
) -> DecompositionReport:
    """
    For each t: rips_wedge(t) equals Rips on the merged table, VR_t ⊆ Č_t ⊆
    VR_2t intrinsically, the cross edges are exactly the pairs with
    ‖(r_C, r_Y)‖_p <= t, and (with check_cech) the ambient wedge Čech complex
    sits between rips_wedge(t) and rips_wedge(2t). Any mismatch raises
    AuditFailure naming the offending simplex and scale.
    """
    if not t_grid:
        raise ParameterDomainError("audit needs a nonempty scale grid")
    metric = cloud_metric(cloud)
    max_dim = default_max_dim(metric.n) if max_dim is None else max_dim
    tol = get_solver_config().scale_tol
    profile = radial_profile(cloud)
    c_ids, y_ids = local_sides(cloud)
    k = len(c_ids)
    report = DecompositionReport()

    for t in sorted(t_grid):
        brute = rips(metric, t, max_dim)
        assembled = rips_wedge(cloud, t, max_dim)
        diff = brute.missing_from(assembled) or assembled.missing_from(brute)
        if diff:
            _fail(f"rips_wedge disagrees with brute-force Rips at t={t:g} on {diff[0]}", diff[0], t)

        if not sandwich_check(metric, t, max_dim):
            _fail(f"intrinsic Rips/Čech sandwich fails at t={t:g}", None, t)

        expected = {
            (i, k + j)
            for i, ci in enumerate(c_ids)
            for j, yj in enumerate(y_ids)
            if lp_combine(profile.r_c[ci], profile.r_y[yj], cloud.params.p) <= t + tol
        }
        actual = {e for e in brute.edges() if e[0] < k <= e[1]}
        if expected != actual:
            bad = sorted(expected ^ actual)[0]
            _fail(f"cross-edge rule fails at t={t:g} on {bad}", bad, t)

        cech_ok = None
        if check_cech:
            cech = cech_wedge_ambient(cloud, t, max_dim, c_binding, y_binding)
            upper = rips_wedge(cloud, 2 * t, max_dim)
            missing = assembled.missing_from(cech) or cech.missing_from(upper)
            if missing:
                _fail(f"wedge Čech sandwich fails at t={t:g} on {missing[0]}", missing[0], t)
            cech_ok = True

        report.rows.append(AuditRow(t, True, True, True, cech_ok, assembled.n_simplices()))
        log("DecompositionAudit", f"t={t:g}: {assembled.n_simplices()} simplices agree")

    return report


def attachment_audit(cloud: WedgeCloud, x: int) -> Tuple[float, float]:
    """
    (lower, upper) with lower = r_C(x) and upper = min over Y vertices of
    the cross distance; checks lower <= upper <= ‖(r_C(x), min r_Y)‖_p.
    """
    ys = cloud.y_vertices()
    if not ys:
        raise ParameterDomainError("attachment audit needs at least one Y vertex")
    if not 0 <= x < cloud.n_c:
        raise IndexError(f"CP vertex {x} out of range")
    tol = get_solver_config().metric_tol
    lower = cloud.r_c(x)
    upper = min(wedge_distance(cloud, WedgePoint.c(x), WedgePoint.y(j)) for j in ys)
    bound = lp_combine(lower, min(cloud.r_y(j) for j in ys), cloud.params.p)
    if not (lower <= upper + tol and upper <= bound + tol):
        raise AuditFailure(f"attachment bounds fail for CP vertex {x}: {lower} <= {upper} <= {bound}")
    return lower, upper
