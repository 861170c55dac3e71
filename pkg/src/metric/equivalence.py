"""
Anchor and Parameter Equivalence Module

Finite checks of how the BK metric moves with its anchor θ, its exponent p,
its scale λ and its snowflake exponent α.
"""

from typing import List, Tuple, Union

import numpy as np

from src.common.config import get_solver_config
from src.common.errors import AuditFailure, CloudMismatchError, ParameterDomainError
from src.common.types import LpExponent
from src.metric.finite_metric import FiniteMetric, PointedFiniteMetric, check_snowflake_params
from src.metric.wedge import WedgeCloud, _merged_table, full_distance_table, lp_combine, scaled_distance_table


def _check_same_points(cloud_a: WedgeCloud, cloud_b: WedgeCloud) -> None:
    if cloud_a.c_side.metric != cloud_b.c_side.metric:
        raise CloudMismatchError("clouds differ on the CP side")
    if cloud_a.y_side != cloud_b.y_side:
        raise CloudMismatchError("clouds differ on the Y side")
    if cloud_a.params != cloud_b.params:
        raise CloudMismatchError(f"clouds use different parameters: {cloud_a.params} vs {cloud_b.params}")
    if cloud_a.include_basepoint != cloud_b.include_basepoint:
        raise CloudMismatchError("one cloud counts the glued basepoint as a vertex and the other does not")


def shared_vertices(cloud_a: WedgeCloud, cloud_b: WedgeCloud) -> List[int]:
    """Merged indices that are cloud vertices under both anchorings"""
    _check_same_points(cloud_a, cloud_b)
    return sorted(set(cloud_a.cloud_indices()) & set(cloud_b.cloud_indices()))


def anchor_uniform_distance(cloud_a: WedgeCloud, cloud_b: WedgeCloud) -> float:
    """
    max over all pairs of shared cloud vertices of |d_A - d_B| for two
    anchors on the same cloud. When the basepoint is excluded, each anchor
    is dropped from the comparison.

    Never exceeds β(θ₁, θ₂): for a cross pair both distances are
    ‖(β(x, θ), c)‖_p, which is 1-Lipschitz in β(x, θ).
    """
    keep = shared_vertices(cloud_a, cloud_b)
    d_a = full_distance_table(cloud_a).dist[np.ix_(keep, keep)]
    d_b = full_distance_table(cloud_b).dist[np.ix_(keep, keep)]
    return float(np.abs(d_a - d_b).max()) if d_a.size else 0.0


def gh_distortion_bound(cloud_a: WedgeCloud, cloud_b: WedgeCloud) -> Tuple[float, float]:
    """
    Distortion of the diagonal correspondence between the two anchorings and
    its bound β(θ₁, θ₂). Half the distortion bounds the Gromov–Hausdorff
    distance.
    """
    distortion = anchor_uniform_distance(cloud_a, cloud_b)
    bound = cloud_a.c_side.metric.d(cloud_a.anchor, cloud_b.anchor)
    if distortion > bound + get_solver_config().metric_tol:
        raise AuditFailure(f"diagonal distortion {distortion} exceeds β(θ₁,θ₂) = {bound}")
    return distortion, bound


def bilipschitz_constant(p: Union[LpExponent, float, str], q: Union[LpExponent, float, str]) -> float:
    """Sharp norm-equivalence constant 2^|1/p - 1/q| between ℓp and ℓq on R²"""
    p, q = LpExponent.parse(p), LpExponent.parse(q)
    return float(2.0 ** abs(p.reciprocal - q.reciprocal))


def bilipschitz_check(
    cloud: WedgeCloud,
    p: Union[LpExponent, float, str],
    q: Union[LpExponent, float, str],
    lambda_a: float,
    lambda_b: float,
) -> bool:
    """
    Check C⁻¹·min(1, μ/λ)·d_{p,λ} <= d_{q,μ} <= C·max(1, μ/λ)·d_{p,λ} on every pair.
    """
    if lambda_a <= 0 or lambda_b <= 0:
        raise ParameterDomainError("scales must be positive")
    c = bilipschitz_constant(p, q)
    ratio = lambda_b / lambda_a
    d_pl = scaled_distance_table(cloud, LpExponent.parse(p), lambda_a)
    d_qm = scaled_distance_table(cloud, LpExponent.parse(q), lambda_b)
    tol = get_solver_config().metric_tol
    lower = min(1.0, ratio) * d_pl / c
    upper = c * max(1.0, ratio) * d_pl
    return bool(np.all(lower <= d_qm + tol) and np.all(d_qm <= upper + tol))


def alpha_modulus(delta: float, lambda_: float, alpha: float, alpha_prime: float, p: Union[LpExponent, float, str]) -> float:
    """ω(δ) = ‖(δ, λ^{1-α'/α} δ^{α'/α})‖_p"""
    check_snowflake_params(lambda_, alpha)
    check_snowflake_params(lambda_, alpha_prime)
    if delta < 0:
        raise ParameterDomainError(f"delta must be >= 0, got {delta}")
    ratio = alpha_prime / alpha
    return lp_combine(delta, lambda_ ** (1.0 - ratio) * delta ** ratio, p)


def resnowflake(cloud: WedgeCloud, alpha_prime: float) -> WedgeCloud:
    """
    Same cloud with the Y side re-expressed at exponent α'.
    d_reg = λ δ^α, so the α' distances are λ (d_reg / λ)^{α'/α}.
    """
    lam, alpha = cloud.params.lambda_, cloud.params.alpha
    check_snowflake_params(lam, alpha_prime)
    table = lam * np.power(cloud.y_side.metric.dist / lam, alpha_prime / alpha)
    y_side = PointedFiniteMetric(FiniteMetric(table, cloud.y_side.metric.labels), cloud.y_side.basepoint)
    params = cloud.params.model_copy(update={"alpha": alpha_prime})
    return WedgeCloud(cloud.c_side, y_side, params, cloud.include_basepoint)


def alpha_modulus_check(cloud: WedgeCloud, alpha_prime: float) -> bool:
    """Every pair satisfies d_{α'} <= ω(d_α)"""
    p = cloud.params.p
    d_a = _merged_table(cloud, p)
    d_b = _merged_table(resnowflake(cloud, alpha_prime), p)
    tol = get_solver_config().metric_tol
    lam, alpha = cloud.params.lambda_, cloud.params.alpha
    for i in range(d_a.shape[0]):
        for j in range(i + 1, d_a.shape[0]):
            if d_b[i, j] > alpha_modulus(d_a[i, j], lam, alpha, alpha_prime, p) + tol:
                return False
    return True
