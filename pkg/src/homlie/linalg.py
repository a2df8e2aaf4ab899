"""Exact rational matrices and echelon-form linear algebra.

Pivots are always the first nonzero entry in column order, so reduced
echelon forms, nullspace bases, and solutions are reproducible.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

__all__ = ["Matrix", "nullspace", "rank", "rref", "solve"]

Vector = tuple[Fraction, ...]


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


class Matrix:
    """Immutable matrix with exact rational entries."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]):
        converted = tuple(tuple(_frac(v) for v in row) for row in rows)
        if not converted or not converted[0]:
            raise ValueError("matrix must have at least one row and column")
        width = len(converted[0])
        if any(len(r) != width for r in converted):
            raise ValueError("ragged rows")
        self.rows = converted

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, n: int, m: int | None = None) -> "Matrix":
        return cls([[0] * (m or n) for _ in range(n)])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, i: int) -> Vector:
        return self.rows[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.rows)

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self.rows)))

    def __add__(self, other: "Matrix") -> "Matrix":
        self._shape_check(other)
        return Matrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._shape_check(other)
        return Matrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in row] for row in self.rows])

    def _shape_check(self, other: "Matrix"):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise ValueError("shape mismatch")

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ValueError("shape mismatch in product")
            cols = other.transpose().rows
            return Matrix(
                [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.rows]
            )
        if isinstance(other, (int, Fraction)):
            c = _frac(other)
            return Matrix([[c * a for a in row] for row in self.rows])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, n: int) -> "Matrix":
        if not self.is_square():
            raise ValueError("power of a non-square matrix")
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Matrix.identity(self.nrows)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def apply(self, vector: Sequence) -> Vector:
        if len(vector) != self.ncols:
            raise ValueError("vector length mismatch")
        vec = [_frac(v) for v in vector]
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self.rows)

    def det(self) -> Fraction:
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        n = self.nrows
        work = [list(row) for row in self.rows]
        det = Fraction(1)
        for col in range(n):
            pivot_row = next((r for r in range(col, n) if work[r][col]), None)
            if pivot_row is None:
                return Fraction(0)
            if pivot_row != col:
                work[col], work[pivot_row] = work[pivot_row], work[col]
                det = -det
            pivot = work[col][col]
            det *= pivot
            for r in range(col + 1, n):
                if work[r][col]:
                    factor = work[r][col] / pivot
                    work[r] = [a - factor * b for a, b in zip(work[r], work[col])]
        return det

    def is_identity(self) -> bool:
        return self.is_square() and self == Matrix.identity(self.nrows)

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(" ".join(str(v) for v in row) for row in self.rows)
        return f"Matrix[{body}]"


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and the pivot column list."""
    work = [[_frac(v) for v in row] for row in rows]
    if not work:
        return [], []
    ncols = len(work[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(work)) if work[i][c]), None)
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        pivot = work[r][c]
        work[r] = [v / pivot for v in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                factor = work[i][c]
                work[i] = [a - factor * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> list[Vector]:
    """Basis of the right nullspace, one vector per free column.

    Each basis vector has a 1 in its free column and zeros in the other free
    columns (the reduced-echelon convention).
    """
    rows = list(rows)
    if ncols is None:
        if not rows:
            raise ValueError("ncols required for an empty system")
        ncols = len(rows[0])
    reduced, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for row, pc in zip(reduced, pivots):
            vec[pc] = -row[fc]
        basis.append(tuple(vec))
    return basis


def solve(matrix: Matrix, target: Sequence) -> Vector | None:
    """One exact solution of ``matrix * x = target``, or None if inconsistent.

    Free variables are set to zero.
    """
    tvec = [_frac(v) for v in target]
    if len(tvec) != matrix.nrows:
        raise ValueError("target length mismatch")
    augmented = [list(row) + [t] for row, t in zip(matrix.rows, tvec)]
    reduced, pivots = rref(augmented)
    ncols = matrix.ncols
    if ncols in pivots:
        return None
    solution = [Fraction(0)] * ncols
    for row, pc in zip(reduced, pivots):
        solution[pc] = row[-1]
    return tuple(solution)
