"""
GF(2) Boundary Module

Boundary matrices of simplicial complexes as dense 0/1 arrays, with rank by
Gaussian elimination over GF(2).
"""

from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from src.common.errors import ParameterDomainError
from src.complexes.simplicial import Simplex, SimplicialComplex, facets


@dataclass(frozen=True)
class BoundaryMatrix:
    """∂_k: rows are (k-1)-simplices, columns k-simplices, both sorted"""
    k: int
    rows: Tuple[Simplex, ...]
    cols: Tuple[Simplex, ...]
    matrix: np.ndarray

    def columns(self) -> List[List[int]]:
        """Nonzero row indices per column"""
        return [np.flatnonzero(self.matrix[:, j]).tolist() for j in range(self.matrix.shape[1])]

    @property
    def rank(self) -> int:
        return gf2_rank(self.matrix)


def gf2_rank(matrix: np.ndarray) -> int:
    """Row reduction with XOR row updates"""
    a = (np.asarray(matrix) % 2).astype(bool)
    n_rows, n_cols = a.shape
    rank = 0
    for c in range(n_cols):
        if rank == n_rows:
            break
        nz = np.flatnonzero(a[rank:, c])
        if nz.size == 0:
            continue
        pivot = rank + int(nz[0])
        if pivot != rank:
            a[[rank, pivot]] = a[[pivot, rank]]
        mask = a[:, c].copy()
        mask[rank] = False
        a[mask] ^= a[rank]
        rank += 1
    return rank


def gf2_product(left: np.ndarray, right: np.ndarray) -> np.ndarray:
    return (left.astype(np.int64) @ right.astype(np.int64)) % 2


def boundary(complex_: SimplicialComplex, k: int) -> BoundaryMatrix:
    """The GF(2) boundary ∂_k for 1 <= k <= max_dim"""
    if not 1 <= k <= complex_.max_dim:
        raise ParameterDomainError(f"boundary degree {k} outside 1..{complex_.max_dim}")
    rows = complex_.k_simplices(k - 1)
    cols = complex_.k_simplices(k)
    index = {s: i for i, s in enumerate(rows)}
    matrix = np.zeros((len(rows), len(cols)), dtype=np.uint8)
    for j, s in enumerate(cols):
        for f in facets(s):
            if f not in index:
                raise ValueError(f"complex is not face-closed: {f} missing below {s}")
            matrix[index[f], j] = 1
    return BoundaryMatrix(k, tuple(rows), tuple(cols), matrix)
