"""
Vietoris–Rips Module

Flag complexes of the threshold graph {d(i, j) <= t}, completed by clique
enumeration.
"""

from typing import Optional

import networkx as nx

from src.common.config import get_solver_config
from src.common.errors import ParameterDomainError
from src.complexes.simplicial import SimplicialComplex, default_max_dim
from src.metric.finite_metric import FiniteMetric


def check_scale(t: float) -> None:
    if not t >= 0:
        raise ParameterDomainError(f"scale t must be >= 0, got {t}")


def threshold_graph(metric: FiniteMetric, t: float) -> nx.Graph:
    """Vertices 0..n-1, an edge wherever d(i, j) <= t"""
    tol = get_solver_config().scale_tol
    g = nx.Graph()
    g.add_nodes_from(range(metric.n))
    for i in range(metric.n):
        for j in range(i + 1, metric.n):
            if metric.dist[i, j] <= t + tol:
                g.add_edge(i, j)
    return g


def flag_complex(graph: nx.Graph, max_dim: int) -> SimplicialComplex:
    """Clique complex of a graph, truncated at max_dim"""
    layers = [set() for _ in range(max_dim + 1)]
    # enumerate_all_cliques yields cliques in nondecreasing size
    for clique in nx.enumerate_all_cliques(graph):
        if len(clique) > max_dim + 1:
            break
        layers[len(clique) - 1].add(tuple(sorted(clique)))
    return SimplicialComplex(tuple(frozenset(layer) for layer in layers), max_dim)


def rips(metric: FiniteMetric, t: float, max_dim: Optional[int] = None) -> SimplicialComplex:
    """VR_t: σ is a simplex iff diam(σ) <= t"""
    check_scale(t)
    max_dim = default_max_dim(metric.n) if max_dim is None else max_dim
    return flag_complex(threshold_graph(metric, t), max_dim)
