"""
Čech Module

Radius-t Čech complexes: intrinsic (witnesses restricted to the finite
space) and ambient (witnesses drawn from an oracle's domain), plus the
Rips sandwich and filtration checks.
"""

from itertools import combinations
from typing import Any, Callable, Iterable, List, Optional, Sequence

from src.common.config import get_solver_config, log
from src.common.errors import SolverNonConvergence
from src.complexes.oracles import OracleBinding, WitnessOracle, WitnessResult, WitnessStatus
from src.complexes.rips import check_scale, rips
from src.complexes.simplicial import Simplex, SimplicialComplex, default_max_dim, facets
from src.metric.finite_metric import FiniteMetric


def cech_intrinsic(metric: FiniteMetric, t: float, max_dim: Optional[int] = None) -> SimplicialComplex:
    """σ is a simplex iff some vertex w has d(w, s) <= t for every s in σ"""
    check_scale(t)
    max_dim = default_max_dim(metric.n) if max_dim is None else max_dim
    tol = get_solver_config().scale_tol
    layers = [set() for _ in range(max_dim + 1)]
    for w in range(metric.n):
        ball = [s for s in range(metric.n) if metric.dist[w, s] <= t + tol]
        for k in range(min(len(ball), max_dim + 1)):
            layers[k].update(combinations(ball, k + 1))
    return SimplicialComplex(tuple(frozenset(layer) for layer in layers), max_dim)


def grow_complex(
    n_vertices: int,
    max_dim: int,
    is_simplex: Callable[[Simplex], bool],
) -> SimplicialComplex:
    """
    Bottom-up construction for a predicate that is monotone under taking
    faces. A candidate (k+1)-set is only tested once all of its facets are
    present, so the result is face-closed by construction.
    """
    layers: List[set] = [set((v,) for v in range(n_vertices))] + [set() for _ in range(max_dim)]
    for k in range(1, max_dim + 1):
        below = layers[k - 1]
        for s in sorted(below):
            for v in range(s[-1] + 1, n_vertices):
                cand = s + (v,)
                if cand in layers[k]:
                    continue
                if all(f in below for f in facets(cand)) and is_simplex(cand):
                    layers[k].add(cand)
        if not layers[k]:
            break
    return SimplicialComplex(tuple(frozenset(layer) for layer in layers), max_dim)


def require_decided(result: WitnessResult, binding: OracleBinding, vertices: Sequence[int],
                    radii: Sequence[float]) -> WitnessResult:
    """Raise on NON_CONVERGED so it never reads as infeasible"""
    if result.status == WitnessStatus.NON_CONVERGED:
        centers = [binding.points[v] for v in vertices]
        raise SolverNonConvergence(
            f"{binding.kind.value} witness search undecided for simplex {tuple(vertices)} "
            f"(best margin {result.margin:.3e})",
            centers=centers, radii=radii,
        )
    return result


def cech_ambient(
    points: Sequence[Any],
    oracle: WitnessOracle,
    t: float,
    max_dim: Optional[int] = None,
    binding: Optional[OracleBinding] = None,
) -> SimplicialComplex:
    """
    σ is a simplex iff the oracle finds a common point of the balls B̄(s, t),
    s in σ. Vertices are 0..len(points)-1. Pass a binding to share its
    memo across calls.
    """
    check_scale(t)
    max_dim = default_max_dim(len(points)) if max_dim is None else max_dim
    binding = binding or OracleBinding(oracle, list(points))

    def is_simplex(s: Simplex) -> bool:
        radii = [t] * len(s)
        return require_decided(binding.query(s, radii), binding, s, radii).feasible

    return grow_complex(len(points), max_dim, is_simplex)


def sandwich_check(
    metric: FiniteMetric,
    t: float,
    max_dim: Optional[int] = None,
    ambient: Optional[OracleBinding] = None,
) -> bool:
    """
    VR_t ⊆ Č_t ⊆ VR_2t for the intrinsic Čech complex, and for the ambient
    one when a binding over the same vertices is given.
    """
    max_dim = default_max_dim(metric.n) if max_dim is None else max_dim
    low, high = rips(metric, t, max_dim), rips(metric, 2 * t, max_dim)
    cechs = [cech_intrinsic(metric, t, max_dim)]
    if ambient is not None:
        cechs.append(cech_ambient(ambient.points, ambient.oracle, t, max_dim, ambient))
    ok = True
    for c in cechs:
        if not (low.issubset(c) and c.issubset(high)):
            missing = low.missing_from(c) or c.missing_from(high)
            log("Sandwich", f"violated at t={t:g}: {missing[:3]}")
            ok = False
    return ok


def filtration_check(builder: Callable[[float], SimplicialComplex], t_grid: Iterable[float]) -> bool:
    """complex(t) ⊆ complex(t') for consecutive grid scales"""
    grid = sorted(t_grid)
    complexes = [builder(t) for t in grid]
    return all(a.issubset(b) for a, b in zip(complexes, complexes[1:]))
