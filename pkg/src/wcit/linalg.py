"""Exact linear algebra over a coefficient field.

Everything here works with exact scalars (rationals or prime-field
residues) through their arithmetic operators; no floating point.  The
central tool is `Echelon`, an accumulator that maintains a fully reduced
row echelon form while rows are streamed into it, which keeps huge
stacked matrices out of memory: only the (at most `ncols`) pivot rows are
retained.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Optional, Sequence

__all__ = [
    "Echelon",
    "StackedKernel",
    "kernel_of_matrix",
    "matrix_rank",
    "mat_mul",
    "mat_sub",
    "identity_matrix",
    "in_span",
]


class Echelon:
    """Reduced row echelon accumulator.

    Rows are sparse maps column -> nonzero scalar.  After each successful
    insert the stored pivot rows are monic at their pivot column and fully
    reduced against one another, so the kernel can be read off directly.
    """

    def __init__(self, ncols: int, field):
        self.ncols = ncols
        self.field = field
        self.pivot_rows: Dict[int, Dict[int, object]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivot_rows)

    def insert(self, row: Dict[int, object]) -> bool:
        """Reduce a row against the accumulator; returns True if rank grew."""
        row = {c: v for c, v in row.items() if v}
        # Pivot rows contain no other pivot columns (reduced form), so
        # eliminating each pivot column present in the row only ever
        # introduces entries at free columns: one pass is complete.
        for col in [c for c in row if c in self.pivot_rows]:
            factor = row.pop(col, None)
            if factor is None:
                continue
            for pcol, value in self.pivot_rows[col].items():
                if pcol == col:
                    continue
                updated = row.get(pcol)
                updated = -factor * value if updated is None else updated - factor * value
                if updated:
                    row[pcol] = updated
                else:
                    row.pop(pcol, None)
        if not row:
            return False
        lead = min(row)
        lc = row.pop(lead)
        one = self.field.one
        row = {c: v / lc for c, v in row.items()}
        row[lead] = one
        # keep existing pivot rows reduced against the new pivot
        for pivot in self.pivot_rows.values():
            factor = pivot.pop(lead, None)
            if factor is None:
                continue
            for col, value in row.items():
                if col == lead:
                    continue
                updated = pivot.get(col)
                updated = -factor * value if updated is None else updated - factor * value
                if updated:
                    pivot[col] = updated
                else:
                    pivot.pop(col, None)
        self.pivot_rows[lead] = row
        return True

    def kernel_basis(self) -> List[List[object]]:
        """Basis of the solution space of (rows) * x = 0, as dense vectors."""
        zero = self.field.zero
        one = self.field.one
        free = [c for c in range(self.ncols) if c not in self.pivot_rows]
        basis = []
        for j in free:
            vector = [zero] * self.ncols
            vector[j] = one
            for pivot_col, row in self.pivot_rows.items():
                value = row.get(j)
                if value is not None:
                    vector[pivot_col] = -value
            basis.append(vector)
        return basis


class StackedKernel:
    """Kernel of a linear map read off from stacked matrix blocks.

    A family of matrices M_0, ..., M_{n-1} of a common shape defines the
    linear map  c  |->  sum_k c_k M_k ; its kernel is computed by feeding
    one constraint row per matrix entry position into an `Echelon`.
    Additional ranks of the map restricted to subspaces (given by basis
    vectors of the coefficient space) can be tracked in the same pass.
    """

    def __init__(self, ncols: int, field, restrictions: Optional[Dict[str, Sequence[Sequence]]] = None):
        self.ncols = ncols
        self.field = field
        self.echelon = Echelon(ncols, field)
        self._restrictions = {}
        for name, vectors in (restrictions or {}).items():
            selection = _as_selection(vectors)
            self._restrictions[name] = (Echelon(len(vectors), field), vectors, selection)

    def add_block(self, matrices: Sequence[Sequence[Sequence]]) -> None:
        """Stack one block: matrices[k][i][j] is entry (i, j) of M_k."""
        if not matrices:
            return
        nrows = len(matrices[0])
        ncols_inner = len(matrices[0][0]) if nrows else 0
        for j in range(ncols_inner):
            for i in range(nrows):
                row = {}
                for k, matrix in enumerate(matrices):
                    value = matrix[i][j]
                    if value:
                        row[k] = value
                if not row:
                    continue
                self.echelon.insert(row)
                for echelon, vectors, selection in self._restrictions.values():
                    if selection is not None:
                        restricted = {
                            selection[c]: v for c, v in row.items() if c in selection
                        }
                    else:
                        restricted = {}
                        for idx, vector in enumerate(vectors):
                            total = self.field.zero
                            for c, v in row.items():
                                total = total + v * vector[c]
                            if total:
                                restricted[idx] = total
                    if restricted:
                        echelon.insert(restricted)

    @property
    def rank(self) -> int:
        return self.echelon.rank

    def restriction_rank(self, name: str) -> int:
        return self._restrictions[name][0].rank

    def kernel_basis(self) -> List[List[object]]:
        return self.echelon.kernel_basis()


def _as_selection(vectors) -> Optional[Dict[int, int]]:
    """Detect a family of distinct unit vectors; map column -> position."""
    selection = {}
    for idx, vector in enumerate(vectors):
        hot = None
        for c, v in enumerate(vector):
            if v:
                if hot is not None or v != 1:
                    return None
                hot = c
        if hot is None or hot in selection:
            return None
        selection[hot] = idx
    return selection


def _dense_to_sparse(row: Sequence) -> Dict[int, object]:
    return {c: v for c, v in enumerate(row) if v}


def matrix_rank(matrix: Sequence[Sequence], field) -> int:
    if not matrix:
        return 0
    echelon = Echelon(len(matrix[0]), field)
    for row in matrix:
        echelon.insert(_dense_to_sparse(row))
    return echelon.rank


def kernel_of_matrix(matrix: Sequence[Sequence], ncols: int, field) -> List[List[object]]:
    """Basis of {x : matrix @ x = 0}; matrix given as dense rows."""
    echelon = Echelon(ncols, field)
    for row in matrix:
        echelon.insert(_dense_to_sparse(row))
    return echelon.kernel_basis()


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence], field):
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    zero = field.zero
    out = [[zero] * cols for _ in range(rows)]
    for i in range(rows):
        row = a[i]
        acc = out[i]
        for k in range(inner):
            v = row[k]
            if not v:
                continue
            brow = b[k]
            for j in range(cols):
                w = brow[j]
                if w:
                    acc[j] = acc[j] + v * w
    return out


def mat_sub(a: Sequence[Sequence], b: Sequence[Sequence]):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def identity_matrix(n: int, field):
    zero, one = field.zero, field.one
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def in_span(vectors: Sequence[Sequence], candidate: Sequence, field) -> bool:
    """True iff candidate lies in the span of the given vectors."""
    if not any(candidate):
        return True
    if not vectors:
        return False
    echelon = Echelon(len(candidate), field)
    for vector in vectors:
        echelon.insert(_dense_to_sparse(vector))
    rank = echelon.rank
    echelon.insert(_dense_to_sparse(candidate))
    return echelon.rank == rank
