"""
Čech Wedge Module

Ambient Čech complexes of mixed clouds. Pure simplices are decided by the
component oracle with the glued basepoint in its witness domain; a mixed
simplex σ ∪ τ is decided by two reductions to one component:

  (C) B <= t and ∩ B̄_C(x, t) ∩ B̄_C(θ, s_B) ≠ ∅
  (Y) A <= t and ∩ B̄_Y(y, t) ∩ B̄_Y(∗, s_A) ≠ ∅

with s_u = (t^p - u^p)^{1/p} (s_u = t for p = INF).
"""

from typing import Optional, Sequence, Tuple

from src.common.config import get_solver_config
from src.common.errors import ParameterDomainError
from src.common.types import LpExponent, Side
from src.complexes.cech import grow_complex, require_decided
from src.complexes.oracles import FiniteSetOracle, OracleBinding
from src.complexes.rips import check_scale
from src.complexes.simplicial import Simplex, SimplicialComplex, default_max_dim
from src.metric.wedge import WedgeCloud
from src.wedge.radial import MixedSimplexCertificate, local_sides, radial_profile, split_simplex


def residual_radius(t: float, u: float, p: LpExponent) -> float:
    """
    Largest s with ‖(s, u)‖_p <= t, clamped to 0 when t^p - u^p is within
    the scale tolerance of 0. Callers guarantee u <= t up to tolerance.
    """
    if p.is_inf:
        return t
    tol = get_solver_config().scale_tol
    exp = float(p.value)
    gap = t ** exp - u ** exp
    if gap <= tol:
        return 0.0
    return gap ** (1.0 / exp)


def default_bindings(cloud: WedgeCloud) -> Tuple[OracleBinding, OracleBinding]:
    """FINITE_SET oracles over every component vertex, θ and ∗ included"""
    c_binding = OracleBinding(FiniteSetOracle(cloud.c_side.metric), list(range(cloud.c_side.n)))
    y_binding = OracleBinding(FiniteSetOracle(cloud.y_side.metric), list(range(cloud.y_side.n)))
    return c_binding, y_binding


def cech_mixed_criterion(
    cloud: WedgeCloud,
    sigma: Sequence[int],
    tau: Sequence[int],
    t: float,
    c_binding: Optional[OracleBinding] = None,
    y_binding: Optional[OracleBinding] = None,
) -> MixedSimplexCertificate:
    """
    Certificate for σ ∪ τ in the ambient Čech complex at t. sigma and tau
    are component indices; each binding maps component indices to points of
    its oracle's domain.
    """
    if not sigma or not tau:
        raise ParameterDomainError("mixed criterion needs nonempty sigma and tau")
    check_scale(t)
    if c_binding is None or y_binding is None:
        dc, dy = default_bindings(cloud)
        c_binding, y_binding = c_binding or dc, y_binding or dy
    tol = get_solver_config().scale_tol
    profile = radial_profile(cloud)
    p = cloud.params.p
    a, b = profile.a(sigma), profile.b(tau)

    if b <= t + tol:
        vertices = list(sigma) + [cloud.anchor]
        radii = [t] * len(sigma) + [residual_radius(t, b, p)]
        hit = require_decided(c_binding.query(vertices, radii), c_binding, vertices, radii)
        if hit.feasible:
            return MixedSimplexCertificate(tuple(sigma), tuple(tau), a, b, True, Side.C, hit.witness)

    if a <= t + tol:
        vertices = list(tau) + [cloud.y_side.basepoint]
        radii = [t] * len(tau) + [residual_radius(t, a, p)]
        hit = require_decided(y_binding.query(vertices, radii), y_binding, vertices, radii)
        if hit.feasible:
            return MixedSimplexCertificate(tuple(sigma), tuple(tau), a, b, True, Side.Y, hit.witness)

    return MixedSimplexCertificate(tuple(sigma), tuple(tau), a, b, False)


def cech_wedge_ambient(
    cloud: WedgeCloud,
    t: float,
    max_dim: Optional[int] = None,
    c_binding: Optional[OracleBinding] = None,
    y_binding: Optional[OracleBinding] = None,
) -> SimplicialComplex:
    """Ambient Čech complex of the cloud over cloud-local vertex ids"""
    check_scale(t)
    c_ids, y_ids = local_sides(cloud)
    n = len(c_ids) + len(y_ids)
    max_dim = default_max_dim(n) if max_dim is None else max_dim
    dc, dy = default_bindings(cloud)
    c_binding, y_binding = c_binding or dc, y_binding or dy

    def is_simplex(s: Simplex) -> bool:
        sigma, tau = split_simplex(cloud, s)
        if not tau:
            radii = [t] * len(sigma)
            return require_decided(c_binding.query(sigma, radii), c_binding, sigma, radii).feasible
        if not sigma:
            radii = [t] * len(tau)
            return require_decided(y_binding.query(tau, radii), y_binding, tau, radii).feasible
        return cech_mixed_criterion(cloud, sigma, tau, t, c_binding, y_binding).verdict

    return grow_complex(n, max_dim, is_simplex)
