"""Exact integer linear algebra: Smith form, integer kernels and Hermite reduction.

Matrices are lists of integer rows. Small dense matrices go through sympy's
normal forms. The relation matrices of the graded pieces have thousands of
mostly empty rows, so they are reduced on a sparse copy instead, choosing
small pivots first and tracking the column transformation only when the
top-degree functional is needed.
"""

from collections.abc import Sequence
from dataclasses import dataclass
from math import gcd

from sympy import Matrix
from sympy.matrices.normalforms import hermite_normal_form as sympy_hermite_normal_form
from sympy.matrices.normalforms import smith_normal_decomp
from sympy.polys.domains import ZZ

from qtoric.errors import ArgumentError

IntMatrix = list[list[int]]


@dataclass(frozen=True)
class SmithForm:
    """Smith normal form data of an integer matrix.

    Attributes:
        rows: Number of rows of the input
        cols: Number of columns of the input
        invariant_factors: Nonzero diagonal entries, positive, each dividing the next
        kernel: Z-basis of the right kernel ``{v : A v = 0}`` when requested, else None
    """

    rows: int
    cols: int
    invariant_factors: tuple[int, ...]
    kernel: tuple[tuple[int, ...], ...] | None = None

    @property
    def rank(self) -> int:
        """Rank of the matrix."""
        return len(self.invariant_factors)

    @property
    def cokernel_rank(self) -> int:
        """Free rank of ``Z^cols / rowspace``."""
        return self.cols - self.rank

    @property
    def torsion(self) -> tuple[int, ...]:
        """Invariant factors greater than one."""
        return tuple(d for d in self.invariant_factors if d > 1)

    @property
    def is_unimodular_surjection(self) -> bool:
        """True when the matrix maps ``Z^cols`` onto ``Z^rows``."""
        return self.rank == self.rows and not self.torsion


def _normalize_diagonal(values: list[int]) -> tuple[int, ...]:
    # Diagonal matrices reduce to Smith form by repeated (gcd, lcm) exchange.
    diagonal = sorted(abs(v) for v in values if v)
    for i in range(len(diagonal)):
        for j in range(i + 1, len(diagonal)):
            a, b = diagonal[i], diagonal[j]
            g = gcd(a, b)
            if g != a:
                diagonal[i], diagonal[j] = g, a * b // g
    return tuple(diagonal)


def smith_decomposition(matrix: Sequence[Sequence[int]], cols: int) -> SmithForm:
    """Invariant factors and a Hermite-reduced kernel basis of a small dense matrix.

    With ``S · A · T = D`` in Smith form, the columns of ``T`` past the rank
    span the right kernel of ``A``.

    Raises:
        ArgumentError: If a row does not have ``cols`` entries
    """
    if any(len(row) != cols for row in matrix):
        raise ArgumentError("Matrix rows must all have the same length")
    if not matrix or not cols:
        kernel = [[int(i == j) for j in range(cols)] for i in range(cols)]
        return SmithForm(rows=len(matrix), cols=cols, invariant_factors=(), kernel=tuple(map(tuple, kernel)))
    diagonal, _, transform = smith_normal_decomp(Matrix(matrix), domain=ZZ)
    factors = [abs(int(diagonal[i, i])) for i in range(min(diagonal.shape)) if diagonal[i, i] != 0]
    rank = len(factors)
    basis = [[int(transform[i, j]) for i in range(cols)] for j in range(rank, cols)]
    return SmithForm(
        rows=len(matrix),
        cols=cols,
        invariant_factors=_normalize_diagonal(factors),
        kernel=tuple(tuple(row) for row in hermite_normal_form(basis)),
    )


def smith_form_sparse(rows: Sequence[dict[int, int]], cols: int, *, with_kernel: bool = False) -> SmithForm:
    """Smith form of a matrix given as sparse rows ``{column: value}``."""
    active_rows: dict[int, dict[int, int]] = {i: dict(r) for i, r in enumerate(rows) if r}
    column_index: dict[int, set[int]] = {}
    for i, row in active_rows.items():
        for j in row:
            column_index.setdefault(j, set()).add(i)
    # Column transform, stored by column: transform[j] = {row: value}.
    transform: dict[int, dict[int, int]] | None = {j: {j: 1} for j in range(cols)} if with_kernel else None

    def add_row_multiple(target: int, source: int, factor: int):
        target_row = active_rows[target]
        for j, v in active_rows[source].items():
            value = target_row.get(j, 0) - factor * v
            if value:
                if j not in target_row:
                    column_index.setdefault(j, set()).add(target)
                target_row[j] = value
            else:
                target_row.pop(j, None)
                column_index[j].discard(target)
        if not target_row:
            del active_rows[target]

    def add_column_multiple(target: int, source: int, factor: int):
        for i in list(column_index.get(source, ())):
            row = active_rows[i]
            value = row.get(target, 0) - factor * row[source]
            if value:
                if target not in row:
                    column_index.setdefault(target, set()).add(i)
                row[target] = value
            else:
                row.pop(target, None)
                column_index[target].discard(i)
                if not row:
                    del active_rows[i]
        if transform is not None:
            target_col = transform[target]
            for r, v in transform[source].items():
                value = target_col.get(r, 0) - factor * v
                if value:
                    target_col[r] = value
                else:
                    target_col.pop(r, None)

    def choose_pivot() -> tuple[int, int]:
        best: tuple[int, int, int, int] | None = None
        for i in sorted(active_rows):
            row = active_rows[i]
            for j in sorted(row):
                key = (abs(row[j]), len(row) * len(column_index[j]), i, j)
                if best is None or key < best:
                    best = key
            if best is not None and best[0] == 1 and best[1] == 1:
                break
        assert best is not None
        return best[2], best[3]

    diagonal: list[int] = []
    pivot_columns: set[int] = set()
    while active_rows:
        r, c = choose_pivot()
        while True:
            pivot = active_rows[r][c]
            moved = False
            for i in sorted(column_index[c] - {r}):
                q = active_rows[i][c] // pivot
                add_row_multiple(i, r, q)
                if i in active_rows and c in active_rows[i]:
                    r, moved = i, True
                    break
            if moved:
                continue
            pivot = active_rows[r][c]
            for j in sorted(set(active_rows[r]) - {c}):
                q = active_rows[r][j] // pivot
                add_column_multiple(j, c, q)
                if j in active_rows[r]:
                    c, moved = j, True
                    break
            if not moved:
                break
        diagonal.append(active_rows[r][c])
        pivot_columns.add(c)
        del active_rows[r]
        column_index[c].discard(r)

    kernel = None
    if transform is not None:
        kernel_columns = [j for j in range(cols) if j not in pivot_columns]
        basis = [[transform[j].get(i, 0) for i in range(cols)] for j in kernel_columns]
        kernel = tuple(tuple(row) for row in hermite_normal_form(basis))
    return SmithForm(
        rows=len(rows),
        cols=cols,
        invariant_factors=_normalize_diagonal(diagonal),
        kernel=kernel,
    )


def hermite_normal_form(rows: Sequence[Sequence[int]]) -> IntMatrix:
    """Row-style Hermite normal form, dropping zero rows.

    The rows span the same lattice as the input. Each row ends in a positive
    pivot, pivots move strictly right from row to row, and every entry in a
    pivot's column further down is reduced into ``[0, pivot)``.
    """
    matrix = [list(row) for row in rows if any(row)]
    if not matrix:
        return []
    reduced = sympy_hermite_normal_form(Matrix(matrix).T).T
    return [[int(v) for v in reduced.row(i)] for i in range(reduced.rows)]


def determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix."""
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise ArgumentError("Determinant requires a square matrix")
    if size == 0:
        return 1
    return int(Matrix(matrix).det(method="bareiss"))
