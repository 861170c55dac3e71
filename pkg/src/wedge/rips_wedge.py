"""
Rips Wedge Module

Vietoris–Rips complexes of mixed clouds assembled from their parts: the
CP-side complex, the Y-side complex, and the join term of mixed simplices
σ ∪ τ admitted by the radial criterion ‖(max r_C(σ), max r_Y(τ))‖_p <= t.
"""

from typing import List, Optional, Sequence

from src.common.config import get_solver_config
from src.common.errors import ParameterDomainError
from src.common.types import LpExponent
from src.complexes.rips import check_scale, rips
from src.complexes.simplicial import Simplex, SimplicialComplex, default_max_dim
from src.metric.finite_metric import FiniteMetric, restrict
from src.metric.wedge import WedgeCloud, lp_combine
from src.wedge.radial import MixedSimplexCertificate, RadialProfile, local_sides, radial_profile


def mixed_rips_criterion(
    profile: RadialProfile,
    sigma: Sequence[int],
    tau: Sequence[int],
    t: float,
    p: LpExponent,
    c_metric: FiniteMetric,
    y_metric: FiniteMetric,
) -> MixedSimplexCertificate:
    """
    σ ∪ τ ∈ VR_t iff σ ∈ VR_t(C), τ ∈ VR_t(Y) and ‖(A, B)‖_p <= t.
    sigma and tau are component indices.
    """
    if not sigma or not tau:
        raise ParameterDomainError("mixed criterion needs nonempty sigma and tau")
    tol = get_solver_config().scale_tol
    a, b = profile.a(sigma), profile.b(tau)
    verdict = (
        c_metric.diameter(sigma) <= t + tol
        and y_metric.diameter(tau) <= t + tol
        and lp_combine(a, b, p) <= t + tol
    )
    return MixedSimplexCertificate(tuple(sigma), tuple(tau), a, b, bool(verdict))


def rips_wedge(cloud: WedgeCloud, t: float, max_dim: Optional[int] = None) -> SimplicialComplex:
    """
    VR_t of the cloud, over cloud-local vertex ids.

    Join candidates are scanned with σ sorted by A; for a fixed τ the
    radial constraint fails for every later σ once it fails, so the scan
    stops there.
    """
    check_scale(t)
    c_ids, y_ids = local_sides(cloud)
    k = len(c_ids)
    max_dim = default_max_dim(k + len(y_ids)) if max_dim is None else max_dim
    tol = get_solver_config().scale_tol
    profile = radial_profile(cloud)
    p = cloud.params.p

    # component complexes over positions in c_ids / y_ids
    c_part = rips(restrict(cloud.c_side.metric, c_ids), t, max_dim) if c_ids else SimplicialComplex.empty(max_dim)
    y_part = rips(restrict(cloud.y_side.metric, y_ids), t, max_dim) if y_ids else SimplicialComplex.empty(max_dim)

    simplices: List[Simplex] = list(c_part.all_simplices())
    simplices.extend(tuple(k + v for v in s) for s in y_part.all_simplices())

    c_sorted = sorted(c_part.all_simplices(), key=lambda s: profile.a([c_ids[v] for v in s]))
    for tau_local in y_part.all_simplices():
        tau = [y_ids[v] for v in tau_local]
        b = profile.b(tau)
        for sigma_local in c_sorted:
            sigma = [c_ids[v] for v in sigma_local]
            if lp_combine(profile.a(sigma), b, p) > t + tol:
                break
            if len(sigma_local) + len(tau_local) > max_dim + 1:
                continue
            cert = mixed_rips_criterion(profile, sigma, tau, t, p, cloud.c_side.metric, cloud.y_side.metric)
            if cert.verdict:
                simplices.append(tuple(sigma_local) + tuple(k + v for v in tau_local))

    return SimplicialComplex.from_simplices(simplices, max_dim, close=False)
