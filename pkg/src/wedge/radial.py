"""
Radial Data Module

Radial functions r_C(x) = β(x, θ) and r_Y(y) = d_reg(y, ∗), the certificate
record for mixed simplices, and the translation between cloud-local vertex
ids and wedge components.
"""

from dataclasses import dataclass
from typing import Any, List, Optional, Sequence, Tuple

from src.common.errors import MetricValidationError
from src.common.types import Side
from src.metric.wedge import WedgeCloud


@dataclass(frozen=True)
class RadialProfile:
    r_c: Tuple[float, ...]
    r_y: Tuple[float, ...]
    anchor: int
    basepoint: int

    def __post_init__(self):
        if self.r_c[self.anchor] != 0.0:
            raise MetricValidationError(f"rC[anchor] must be 0, got {self.r_c[self.anchor]}", field="rC")
        if self.r_y[self.basepoint] != 0.0:
            raise MetricValidationError(f"rY[*] must be 0, got {self.r_y[self.basepoint]}", field="rY")
        for j, r in enumerate(self.r_y):
            if j != self.basepoint and not r > 0:
                raise MetricValidationError(f"rY[{j}] must be > 0, got {r}", indices=(j,), field="rY")

    def a(self, sigma: Sequence[int]) -> float:
        """max r_C over sigma"""
        return max(self.r_c[i] for i in sigma)

    def b(self, tau: Sequence[int]) -> float:
        """max r_Y over tau"""
        return max(self.r_y[j] for j in tau)

    def to_json(self) -> dict:
        return {"rC": list(self.r_c), "rY": list(self.r_y), "anchor": self.anchor, "basepoint": self.basepoint}


def radial_profile(cloud: WedgeCloud) -> RadialProfile:
    return RadialProfile(
        tuple(float(v) for v in cloud.c_side.radii()),
        tuple(float(v) for v in cloud.y_side.radii()),
        cloud.anchor,
        cloud.y_side.basepoint,
    )


@dataclass(frozen=True)
class MixedSimplexCertificate:
    """
    Verdict on σ ∪ τ with σ a CP-side and τ a Y-side vertex set (component
    indices). witness_side is set only by the Čech criterion.
    """
    sigma: Tuple[int, ...]
    tau: Tuple[int, ...]
    a: float
    b: float
    verdict: bool
    witness_side: Optional[Side] = None
    witness: Any = None

    def to_json(self) -> dict:
        return {
            "sigma": list(self.sigma),
            "tau": list(self.tau),
            "A": self.a,
            "B": self.b,
            "verdict": self.verdict,
            "witnessSide": self.witness_side.value if self.witness_side else "NONE",
        }


# ── Cloud-local ids ───────────────────────────────────────────────────────

def local_sides(cloud: WedgeCloud) -> Tuple[List[int], List[int]]:
    """
    (CP component index, Y component index) lists indexed by cloud-local
    vertex id: local ids 0..len(c)-1 are CP vertices, the rest Y vertices.
    """
    ids = cloud.cloud_indices()
    c_ids = [m for m in ids if m < cloud.n_c]
    ys = cloud.y_vertices()
    y_ids = [ys[m - cloud.n_c] for m in ids if m >= cloud.n_c]
    return c_ids, y_ids


def split_simplex(cloud: WedgeCloud, simplex: Sequence[int]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Cloud-local simplex to (σ, τ) in component indices"""
    c_ids, y_ids = local_sides(cloud)
    k = len(c_ids)
    sigma = tuple(c_ids[v] for v in simplex if v < k)
    tau = tuple(y_ids[v - k] for v in simplex if v >= k)
    return sigma, tau
