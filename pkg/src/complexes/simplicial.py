"""
Simplicial Complex Module

Dimension-graded, face-closed simplicial complexes over integer vertex ids.
Simplices are strictly increasing vertex tuples.
"""

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from src.common.config import get_solver_config

Simplex = Tuple[int, ...]


def as_simplex(vertices: Iterable[int]) -> Simplex:
    """Sorted, duplicate-free, nonempty vertex tuple"""
    verts = [int(v) for v in vertices]
    simplex = tuple(sorted(set(verts)))
    if not simplex:
        raise ValueError("a simplex needs at least one vertex")
    if len(simplex) != len(verts):
        raise ValueError(f"duplicate vertices in {verts}")
    if simplex[0] < 0:
        raise ValueError(f"vertex ids must be >= 0, got {simplex[0]}")
    return simplex


def facets(simplex: Simplex) -> List[Simplex]:
    """Codimension-one faces"""
    if len(simplex) < 2:
        return []
    return [simplex[:i] + simplex[i + 1:] for i in range(len(simplex))]


def default_max_dim(n_vertices: int) -> int:
    """cloud size - 1, capped by the configured dimension cap"""
    return max(0, min(n_vertices - 1, get_solver_config().max_dim_cap))


@dataclass(frozen=True)
class SimplicialComplex:
    """
    simplices[k] holds the k-simplices. max_dim is the construction cap,
    so len(simplices) == max_dim + 1 always.
    """
    simplices: Tuple[FrozenSet[Simplex], ...]
    max_dim: int

    def __post_init__(self):
        if self.max_dim < 0:
            raise ValueError(f"max_dim must be >= 0, got {self.max_dim}")
        if len(self.simplices) != self.max_dim + 1:
            raise ValueError(f"expected {self.max_dim + 1} dimension slots, got {len(self.simplices)}")
        for k, layer in enumerate(self.simplices):
            for s in layer:
                if len(s) != k + 1 or list(s) != sorted(set(s)):
                    raise ValueError(f"malformed {k}-simplex {s}")

    # ── Construction ──────────────────────────────────────────────────────

    @classmethod
    def empty(cls, max_dim: int) -> "SimplicialComplex":
        return cls(tuple(frozenset() for _ in range(max_dim + 1)), max_dim)

    @classmethod
    def from_simplices(cls, simplices: Iterable[Iterable[int]], max_dim: int,
                       close: bool = True) -> "SimplicialComplex":
        """
        Build from generators. With close=True every face is added; a
        generator above max_dim raises ValueError.
        """
        layers: List[set] = [set() for _ in range(max_dim + 1)]
        for raw in simplices:
            s = as_simplex(raw)
            if len(s) - 1 > max_dim:
                raise ValueError(f"simplex {s} exceeds max_dim={max_dim}")
            if not close:
                layers[len(s) - 1].add(s)
                continue
            for size in range(len(s), 0, -1):
                layer = layers[size - 1]
                for face in combinations(s, size):
                    layer.add(face)
        return cls(tuple(frozenset(layer) for layer in layers), max_dim)

    @classmethod
    def full_simplex(cls, vertices: Sequence[int], max_dim: Optional[int] = None) -> "SimplicialComplex":
        """Every nonempty subset of the vertices, up to max_dim"""
        verts = as_simplex(vertices)
        max_dim = len(verts) - 1 if max_dim is None else max_dim
        layers = [frozenset(combinations(verts, k + 1)) for k in range(max_dim + 1)]
        return cls(tuple(layers), max_dim)

    # ── Queries ───────────────────────────────────────────────────────────

    @property
    def dim(self) -> int:
        """Top dimension actually present, -1 for the empty complex"""
        for k in range(self.max_dim, -1, -1):
            if self.simplices[k]:
                return k
        return -1

    def vertices(self) -> List[int]:
        return sorted(s[0] for s in self.simplices[0])

    def edges(self) -> List[Simplex]:
        return sorted(self.simplices[1]) if self.max_dim >= 1 else []

    def f_vector(self) -> List[int]:
        return [len(layer) for layer in self.simplices]

    def n_simplices(self) -> int:
        return sum(self.f_vector())

    def k_simplices(self, k: int) -> List[Simplex]:
        """Sorted k-simplices; empty outside 0..max_dim"""
        if not 0 <= k <= self.max_dim:
            return []
        return sorted(self.simplices[k])

    def all_simplices(self) -> List[Simplex]:
        """Every simplex, by dimension then lexicographically"""
        out: List[Simplex] = []
        for k in range(self.max_dim + 1):
            out.extend(sorted(self.simplices[k]))
        return out

    def __contains__(self, simplex) -> bool:
        s = tuple(sorted(simplex))
        k = len(s) - 1
        return 0 <= k <= self.max_dim and s in self.simplices[k]

    def issubset(self, other: "SimplicialComplex") -> bool:
        """Simplex-set inclusion over the dimensions both complexes carry"""
        top = min(self.max_dim, other.max_dim)
        return all(self.simplices[k] <= other.simplices[k] for k in range(top + 1))

    def missing_from(self, other: "SimplicialComplex") -> List[Simplex]:
        """Simplices of self absent from other, sorted"""
        top = min(self.max_dim, other.max_dim)
        out: List[Simplex] = []
        for k in range(top + 1):
            out.extend(sorted(self.simplices[k] - other.simplices[k]))
        return out

    def same_simplices(self, other: "SimplicialComplex") -> bool:
        return self.issubset(other) and other.issubset(self)

    def is_face_closed(self) -> bool:
        for k in range(1, self.max_dim + 1):
            lower = self.simplices[k - 1]
            for s in self.simplices[k]:
                if any(f not in lower for f in facets(s)):
                    return False
        return True

    def induced(self, vertex_set: Iterable[int]) -> "SimplicialComplex":
        """Subcomplex of simplices whose vertices all lie in vertex_set"""
        keep = set(vertex_set)
        layers = tuple(frozenset(s for s in layer if keep.issuperset(s)) for layer in self.simplices)
        return SimplicialComplex(layers, self.max_dim)

    def may_be_truncated(self) -> bool:
        """
        True when some (max_dim + 1)-subset of vertices has every facet
        present, so the cap at max_dim may have hidden a simplex.
        """
        verts = self.vertices()
        if len(verts) <= self.max_dim + 1:
            return False
        top = self.simplices[self.max_dim]
        for s in top:
            for v in verts:
                if v > s[-1] and all(f in top for f in facets(s + (v,))):
                    return True
        return False

    def is_full_simplex(self) -> bool:
        """
        True when every nonempty vertex subset of size <= max_dim + 1 is
        present, i.e. the complex is a (possibly truncated) full simplex.
        Pair with may_be_truncated() before drawing topological conclusions.
        """
        verts = self.vertices()
        if not verts:
            return False
        for k in range(min(len(verts), self.max_dim + 1)):
            if len(self.simplices[k]) != comb(len(verts), k + 1):
                return False
        return True

    def cone_apex(self) -> Optional[int]:
        """
        Smallest vertex a such that σ ∪ {a} is present for every simplex σ
        below max_dim and every max_dim-simplex contains a, or None.
        """
        for a in self.vertices():
            if self._is_apex(a):
                return a
        return None

    def _is_apex(self, a: int) -> bool:
        for k in range(self.max_dim):
            for s in self.simplices[k]:
                if a in s:
                    continue
                if tuple(sorted(s + (a,))) not in self.simplices[k + 1]:
                    return False
        return all(a in s for s in self.simplices[self.max_dim])

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * n for k, n in enumerate(self.f_vector()))

    def one_skeleton(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices())
        g.add_edges_from(self.edges())
        return g

    def relabel(self, mapping: Dict[int, int]) -> "SimplicialComplex":
        """Apply an injective vertex map"""
        return SimplicialComplex.from_simplices(
            (tuple(mapping[v] for v in s) for s in self.all_simplices()), self.max_dim, close=False
        )

    def to_json(self, labels: Optional[Sequence[str]] = None) -> dict:
        data = {
            "maxDim": self.max_dim,
            "fVector": self.f_vector(),
            "simplices": [list(s) for s in self.all_simplices()],
        }
        if labels is not None:
            data["labels"] = [[labels[v] for v in s] for s in self.all_simplices()]
        return data
