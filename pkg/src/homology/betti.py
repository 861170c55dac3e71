"""
Betti Module

GF(2) Betti numbers, Euler characteristics, connectivity and certified
contractibility of complexes, and Betti curves over scale grids.

"Contractible" is only ever claimed for a full simplex or a cone.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import networkx as nx

from src.common.config import get_solver_config, log
from src.common.errors import AuditFailure, ParameterDomainError
from src.common.types import ComplexKind
from src.complexes.cech import cech_intrinsic
from src.complexes.oracles import OracleBinding
from src.complexes.rips import rips
from src.complexes.simplicial import SimplicialComplex, default_max_dim
from src.homology.boundary import boundary
from src.metric.wedge import WedgeCloud, cloud_metric
from src.wedge.cech_wedge import cech_wedge_ambient
from src.wedge.rips_wedge import rips_wedge


def connected_components(complex_: SimplicialComplex) -> int:
    """Components of the 1-skeleton"""
    if not complex_.vertices():
        return 0
    return nx.number_connected_components(complex_.one_skeleton())


def euler_characteristic(complex_: SimplicialComplex) -> int:
    return complex_.euler_characteristic()


def is_contractible_certified(complex_: SimplicialComplex) -> bool:
    """
    Full simplex or cone; never inferred from Betti numbers. A complex
    whose dimension cap may have hidden simplices is never certified.
    """
    if not complex_.vertices() or complex_.may_be_truncated():
        return False
    return complex_.is_full_simplex() or complex_.cone_apex() is not None


def betti(complex_: SimplicialComplex) -> List[int]:
    """
    (β_0, ..., β_maxDim) over GF(2) with β_k = dim ker ∂_k - rank ∂_{k+1}.
    β_maxDim assumes nothing above max_dim, so it is exact only for
    complexes that were not truncated there.
    """
    if complex_.n_simplices() > get_solver_config().max_simplices:
        raise ParameterDomainError(
            f"{complex_.n_simplices()} simplices exceed the cap of {get_solver_config().max_simplices}"
        )
    f = complex_.f_vector()
    ranks = [0] + [boundary(complex_, k).rank for k in range(1, complex_.max_dim + 1)] + [0]
    values = [f[k] - ranks[k] - ranks[k + 1] for k in range(complex_.max_dim + 1)]

    if complex_.dim <= 1 and complex_.vertices():
        b0 = connected_components(complex_)
        edges = f[1] if complex_.max_dim >= 1 else 0
        graph_b1 = edges - f[0] + b0
        if values[0] != b0 or (complex_.max_dim >= 1 and values[1] != graph_b1):
            raise AuditFailure(f"rank path {values[:2]} disagrees with graph formula ({b0}, {graph_b1})")
    return values


@dataclass
class BettiScale:
    t: float
    betti: List[int]
    euler: int
    f_vector: List[int]
    contractible: bool

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "betti": self.betti,
            "euler": self.euler,
            "fVector": self.f_vector,
            "contractible": self.contractible,
        }


@dataclass
class BettiProfile:
    """Betti vectors per scale; provenance is "decomposition" or "direct" """
    kind: ComplexKind
    provenance: str
    max_dim: int
    per_scale: List[BettiScale] = field(default_factory=list)

    def changes(self) -> List[float]:
        """Scales whose Betti vector differs from the previous scale's"""
        return [b.t for a, b in zip(self.per_scale, self.per_scale[1:]) if a.betti != b.betti]

    def at(self, t: float) -> BettiScale:
        for entry in self.per_scale:
            if entry.t == t:
                return entry
        raise KeyError(t)

    def to_json(self) -> dict:
        return {
            "complex": self.kind.value,
            "provenance": self.provenance,
            "maxDim": self.max_dim,
            "perScale": [s.to_json() for s in self.per_scale],
            "changes": self.changes(),
        }


def sweep_provenance(kind: ComplexKind, direct: bool) -> str:
    """
    How complexes of this kind are built: intrinsic Čech always from the
    merged table ("direct"), ambient Čech always through the per-side
    reduction ("decomposition"), Rips either way.
    """
    if kind == ComplexKind.CECH_INTRINSIC:
        return "direct"
    if kind == ComplexKind.CECH_AMBIENT:
        return "decomposition"
    return "direct" if direct else "decomposition"


def build_complex(
    cloud: WedgeCloud,
    t: float,
    kind: ComplexKind,
    max_dim: int,
    direct: bool = False,
    c_binding: Optional[OracleBinding] = None,
    y_binding: Optional[OracleBinding] = None,
) -> SimplicialComplex:
    """One complex of the requested kind over cloud-local vertex ids"""
    if kind == ComplexKind.RIPS:
        return rips(cloud_metric(cloud), t, max_dim) if direct else rips_wedge(cloud, t, max_dim)
    if kind == ComplexKind.CECH_INTRINSIC:
        return cech_intrinsic(cloud_metric(cloud), t, max_dim)
    return cech_wedge_ambient(cloud, t, max_dim, c_binding, y_binding)


def betti_sweep(
    cloud: WedgeCloud,
    t_grid: Sequence[float],
    kind: ComplexKind = ComplexKind.RIPS,
    max_dim: Optional[int] = None,
    direct: bool = False,
    c_binding: Optional[OracleBinding] = None,
    y_binding: Optional[OracleBinding] = None,
) -> BettiProfile:
    """
    Betti vector at every grid scale, sorted by t. Complexes are built one
    dimension above max_dim (when the cloud allows it) so that β_maxDim is
    exact.
    """
    if not t_grid:
        raise ParameterDomainError("betti sweep needs a nonempty scale grid")
    n = len(cloud.cloud_indices())
    max_dim = default_max_dim(n) if max_dim is None else max_dim
    build_dim = max(0, min(max_dim + 1, n - 1))
    profile = BettiProfile(kind, sweep_provenance(kind, direct), max_dim)

    for t in sorted(set(t_grid)):
        cx = build_complex(cloud, t, kind, build_dim, direct, c_binding, y_binding)
        values = betti(cx)
        values = (values + [0] * (max_dim + 1))[: max_dim + 1]
        profile.per_scale.append(BettiScale(
            t=t,
            betti=values,
            euler=cx.euler_characteristic(),
            f_vector=cx.f_vector(),
            contractible=is_contractible_certified(cx),
        ))
    log("BettiSweep", f"{kind.value}: {len(profile.per_scale)} scales, changes at {profile.changes()}")
    return profile
