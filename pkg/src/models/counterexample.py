"""
Scalar Counterexample Scenario Module

Finite evaluations of the sequences ψ_n = i/n and χ_n = φ + i/n in the
scalar model CB(C, C). They demonstrate that:
  - ψ_n converges to θ₁ under d_θ₁ but stays β(θ₁, θ₂) away from it under d_θ₂
  - χ_n converges to φ in cb-norm while d_θ(φ, χ_n) never drops below β(φ, θ)
  - no bound d <= f(‖·‖_cb) with f(0+) = 0 can hold across the two sides
Radii sit on the maximal admissible value λ·‖ψ‖_cb^{α/2}.
"""

import math
from typing import Dict, List, Optional

from pydantic import BaseModel, Field

from src.common.config import get_solver_config, log
from src.common.errors import ParameterDomainError
from src.common.types import BKParams, WedgePoint
from src.metric.equivalence import anchor_uniform_distance
from src.metric.wedge import WedgeCloud, wedge_distance
from src.models.cp_models import bures_scalar, scalar_side
from src.models.synthetic import shrinking_star


class CounterexampleRow(BaseModel):
    n: int
    psi_cb_norm: float = Field(description="‖ψ_n‖_cb = 1/n")
    psi_radius: float
    d_anchor_psi: float = Field(description="d_θ₁(θ₁, ψ_n)")
    d_second_anchor_psi: float = Field(description="d_θ₂(θ₁, ψ_n)")
    d_phi_psi: float = Field(description="d_θ₁(φ, ψ_n)")
    chi_cb_distance: float = Field(description="‖χ_n - φ‖_cb = 1/n")
    d_phi_chi: float = Field(description="d_θ₁(φ, χ_n)")
    ksw_ratio: float = Field(description="d_θ₁(φ, χ_n) / ‖χ_n - φ‖_cb^{1/2}")


class CounterexampleReport(BaseModel):
    anchor: float
    second_anchor: float
    phi: float
    params: Dict
    beta_anchors: float
    beta_phi_anchor: float
    uniform_anchor_gap: float
    rows: List[CounterexampleRow]
    anchor_limit_vanishes: bool
    separation_persists: bool
    cb_gap_persists: bool

    @property
    def holds(self) -> bool:
        return self.anchor_limit_vanishes and self.separation_persists and self.cb_gap_persists


def scalar_counterexample_scenario(
    anchor_c: float,
    n_max: int,
    second_anchor: float = 4.0,
    phi: Optional[float] = None,
    params: Optional[BKParams] = None,
) -> CounterexampleReport:
    """
    Evaluate both sequences for n = 1..n_max.

    phi defaults to the second anchor, so d_θ₁(φ, ψ_n) and d_θ₂(θ₁, ψ_n)
    share the same floor β(θ₁, θ₂).
    """
    if n_max < 1:
        raise ParameterDomainError(f"n_max must be >= 1, got {n_max}")
    phi = second_anchor if phi is None else phi
    if second_anchor == anchor_c or phi == anchor_c:
        raise ParameterDomainError("second anchor and φ must differ from the anchor")
    params = params or BKParams()
    tol = get_solver_config().metric_tol

    cs = sorted({0.0, float(anchor_c), float(second_anchor), float(phi)})
    c_side = scalar_side(cs, anchor=cs.index(anchor_c))
    i_theta, i_theta2, i_phi = cs.index(anchor_c), cs.index(second_anchor), cs.index(phi)
    ns = list(range(1, n_max + 1))

    psi = shrinking_star([1.0 / n for n in ns], params.lambda_, params.alpha, [f"psi{n}" for n in ns])
    chi = shrinking_star([math.hypot(phi, 1.0 / n) for n in ns], params.lambda_, params.alpha,
                         [f"chi{n}" for n in ns])
    psi_cloud = WedgeCloud(c_side, psi.pointed_metric, params)
    psi_cloud_2 = psi_cloud.with_anchor(i_theta2)
    chi_cloud = WedgeCloud(c_side, chi.pointed_metric, params)

    log("Counterexample", f"θ₁={anchor_c:g}, θ₂={second_anchor:g}, φ={phi:g}, n <= {n_max}, p={params.p}")

    rows = []
    for n in ns:
        y = WedgePoint.y(n)
        d_phi_chi = wedge_distance(chi_cloud, WedgePoint.c(i_phi), y)
        rows.append(CounterexampleRow(
            n=n,
            psi_cb_norm=1.0 / n,
            psi_radius=psi_cloud.r_y(n),
            d_anchor_psi=wedge_distance(psi_cloud, WedgePoint.c(i_theta), y),
            d_second_anchor_psi=wedge_distance(psi_cloud_2, WedgePoint.c(i_theta), y),
            d_phi_psi=wedge_distance(psi_cloud, WedgePoint.c(i_phi), y),
            chi_cb_distance=1.0 / n,
            d_phi_chi=d_phi_chi,
            ksw_ratio=d_phi_chi * math.sqrt(n),
        ))

    beta_anchors = bures_scalar(anchor_c, second_anchor)
    beta_phi = bures_scalar(phi, anchor_c)
    d_first = [r.d_anchor_psi for r in rows]
    return CounterexampleReport(
        anchor=anchor_c,
        second_anchor=second_anchor,
        phi=phi,
        params=params.to_json(),
        beta_anchors=beta_anchors,
        beta_phi_anchor=beta_phi,
        uniform_anchor_gap=anchor_uniform_distance(psi_cloud, psi_cloud_2),
        rows=rows,
        anchor_limit_vanishes=all(a >= b for a, b in zip(d_first, d_first[1:]))
        and all(abs(r.d_anchor_psi - r.psi_radius) <= tol for r in rows),
        separation_persists=all(r.d_second_anchor_psi >= beta_anchors - tol for r in rows),
        cb_gap_persists=all(r.d_phi_chi >= beta_phi - tol for r in rows),
    )
