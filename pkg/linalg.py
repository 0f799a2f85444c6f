"""
Exact linear algebra over cyclotomic fields for the regrade toolkit
Handles echelon forms, ranks, determinants, nullspaces and subspace operations
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from scalar import Cyclotomic, common_conductor

logger = logging.getLogger(__name__)

Vector = List[Cyclotomic]
Matrix = List[Vector]


def zero_vector(length: int, conductor: int = 1) -> Vector:
    return [Cyclotomic.zero(conductor) for _ in range(length)]


def is_zero_vector(v: Sequence[Cyclotomic]) -> bool:
    return not any(v)


def scale(c: Cyclotomic, v: Sequence[Cyclotomic]) -> Vector:
    return [c * x for x in v]


def axpy(a: Cyclotomic, x: Sequence[Cyclotomic], y: Sequence[Cyclotomic]) -> Vector:
    """y + a*x"""
    return [yi + a * xi if xi else yi for xi, yi in zip(x, y)]


def rref(rows: Sequence[Sequence[Cyclotomic]]) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form with leftmost pivots; zero rows are dropped."""
    work = [list(r) for r in rows]
    if not work:
        return [], []
    ncols = len(work[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(work)) if work[i][c]), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = work[r][c].invert()
        work[r] = scale(inv, work[r])
        for i in range(len(work)):
            if i != r and work[i][c]:
                work[i] = axpy(-work[i][c], work[r], work[i])
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def rank(rows: Sequence[Sequence[Cyclotomic]]) -> int:
    return len(rref(rows)[1])


def determinant(matrix: Sequence[Sequence[Cyclotomic]]) -> Cyclotomic:
    """Exact determinant by field Gaussian elimination, sign tracked through swaps."""
    n = len(matrix)
    if n == 0:
        return Cyclotomic.one()
    if any(len(row) != n for row in matrix):
        raise ValueError("Determinant needs a square matrix")
    conductor = common_conductor(x for row in matrix for x in row)
    work = [list(r) for r in matrix]
    det = Cyclotomic.one(conductor)
    for c in range(n):
        pivot = next((i for i in range(c, n) if work[i][c]), None)
        if pivot is None:
            return Cyclotomic.zero(conductor)
        if pivot != c:
            work[c], work[pivot] = work[pivot], work[c]
            det = -det
        det = det * work[c][c]
        inv = work[c][c].invert()
        for i in range(c + 1, n):
            if work[i][c]:
                work[i] = axpy(-(work[i][c] * inv), work[c], work[i])
    return det


def nullspace(matrix: Sequence[Sequence[Cyclotomic]], ncols: Optional[int] = None,
              conductor: int = 1) -> Matrix:
    """RREF basis of {x : M x = 0}."""
    reduced, pivots = rref(matrix)
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    if reduced:
        conductor = common_conductor(x for row in reduced for x in row)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = zero_vector(ncols, conductor)
        v[f] = Cyclotomic.one(conductor)
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        basis.append(v)
    return rref(basis)[0]


def solve(matrix: Sequence[Sequence[Cyclotomic]], rhs: Sequence[Cyclotomic]) -> Optional[Vector]:
    """One solution of M x = rhs (free variables set to zero), or None."""
    if not matrix:
        return None
    ncols = len(matrix[0])
    augmented = [list(row) + [b] for row, b in zip(matrix, rhs)]
    reduced, pivots = rref(augmented)
    if ncols in pivots:
        return None
    conductor = common_conductor(list(rhs) + [x for row in matrix for x in row])
    x = zero_vector(ncols, conductor)
    for row, p in zip(reduced, pivots):
        x[p] = row[ncols]
    return x


def transpose(matrix: Sequence[Sequence[Cyclotomic]]) -> Matrix:
    return [list(col) for col in zip(*matrix)]


class EchelonBasis:
    """Incrementally maintained RREF basis of a span.

    add() reduces a vector against the basis and inserts it when it is new;
    the basis stays fully reduced, so key() is a canonical subspace label.
    """

    def __init__(self, length: int):
        self.length = length
        self._rows: Dict[int, Vector] = {}

    @property
    def rank(self) -> int:
        return len(self._rows)

    def reduce(self, v: Sequence[Cyclotomic]) -> Vector:
        v = list(v)
        for p, row in self._rows.items():
            if v[p]:
                v = axpy(-v[p], row, v)
        return v

    def add(self, v: Sequence[Cyclotomic]) -> bool:
        v = self.reduce(v)
        pivot = next((i for i, x in enumerate(v) if x), None)
        if pivot is None:
            return False
        v = scale(v[pivot].invert(), v)
        for p, row in list(self._rows.items()):
            if row[pivot]:
                self._rows[p] = axpy(-row[pivot], v, row)
        self._rows[pivot] = v
        return True

    def contains(self, v: Sequence[Cyclotomic]) -> bool:
        return is_zero_vector(self.reduce(v))

    def rows(self) -> Matrix:
        return [self._rows[p] for p in sorted(self._rows)]

    def pivots(self) -> List[int]:
        return sorted(self._rows)

    def key(self) -> Tuple:
        return tuple(tuple(row) for row in self.rows())


def span(vectors: Sequence[Sequence[Cyclotomic]], length: int) -> EchelonBasis:
    basis = EchelonBasis(length)
    for v in vectors:
        basis.add(v)
    return basis


def subspace_contains(basis_rows: Sequence[Sequence[Cyclotomic]], v: Sequence[Cyclotomic]) -> bool:
    return span(basis_rows, len(v)).contains(v)


def subspace_sum(u: Sequence[Sequence[Cyclotomic]], v: Sequence[Sequence[Cyclotomic]], length: int) -> Matrix:
    return span(list(u) + list(v), length).rows()


def subspace_intersection(u: Sequence[Sequence[Cyclotomic]], v: Sequence[Sequence[Cyclotomic]],
                          length: int, conductor: int = 1) -> Matrix:
    """U ∩ V as the common nullspace of both annihilators."""
    if not u or not v:
        return []
    ann_u = nullspace(u, length, conductor) if u else []
    ann_v = nullspace(v, length, conductor) if v else []
    annihilators = ann_u + ann_v
    if not annihilators:
        return rref(u)[0]
    return nullspace(annihilators, length, conductor)


def same_subspace(u: Sequence[Sequence[Cyclotomic]], v: Sequence[Sequence[Cyclotomic]]) -> bool:
    return rref(u)[0] == rref(v)[0]
