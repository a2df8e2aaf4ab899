"""Finite-dimensional Lie algebras as validated structure-constant tables.

Brackets are stored sparsely for index pairs i < j only; antisymmetry is a
construction invariant and the Jacobi identity is checked exhaustively on
every instance.  Linear maps on an algebra are square matrices in the
column-image convention: column i holds the coordinates of the image of
basis vector e_i.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .linalg import Matrix, rref, nullspace, solve

__all__ = [
    "AntisymmetryError",
    "JacobiError",
    "LieAlgebra",
    "LieFileError",
    "center",
    "derived_subalgebra",
    "from_matrix_basis",
    "gl",
    "gl_slz",
    "heisenberg",
    "load_lie_algebra",
    "sl",
    "upper_triangular",
]


class AntisymmetryError(ValueError):
    """Structure constants violate c_ij^k = -c_ji^k (or c_ii^k = 0)."""


class JacobiError(ValueError):
    """Structure constants violate the Jacobi identity."""


class LieFileError(ValueError):
    """A structure-constant file is malformed."""


BracketTable = Mapping[tuple[int, int], Mapping[int, Fraction]]


class LieAlgebra:
    """A Lie algebra of a fixed dimension with named basis vectors.

    ``brackets`` maps 0-based index pairs to sparse coordinate dictionaries:
    ``{(i, j): {k: c}}`` means [e_i, e_j] = sum c * e_k.  Pairs may be given
    in either index order but must be antisymmetry-consistent.
    """

    __slots__ = ("dim", "names", "_table")

    def __init__(
        self,
        dim: int,
        brackets: BracketTable,
        names: Sequence[str] | None = None,
    ):
        if dim < 1:
            raise ValueError("dimension must be positive")
        if names is None:
            names = tuple(f"e{i + 1}" for i in range(dim))
        else:
            names = tuple(names)
            if len(names) != dim:
                raise ValueError("basis name count does not match the dimension")
        self.dim = dim
        self.names = names

        table: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (i, j), coords in brackets.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValueError(f"bracket index out of range: {(i, j)}")
            entries = {k: Fraction(c) for k, c in coords.items() if Fraction(c) != 0}
            for k in entries:
                if not 0 <= k < dim:
                    raise ValueError(f"bracket target index out of range: {k}")
            if i == j:
                if entries:
                    k = min(entries)
                    raise AntisymmetryError(
                        f"[e{i + 1}, e{i + 1}] must vanish; found c[{i + 1},{i + 1}]^{k + 1}"
                    )
                continue
            key, stored = ((i, j), entries) if i < j else ((j, i), {k: -c for k, c in entries.items()})
            if key in table:
                if table[key] != stored:
                    k = min(set(table[key]) | set(stored))
                    raise AntisymmetryError(
                        f"inconsistent values for c[{key[0] + 1},{key[1] + 1}]^{k + 1} "
                        "under antisymmetry"
                    )
            elif stored:
                table[key] = stored
        self._table = table
        self._check_jacobi()

    # -- brackets --------------------------------------------------------

    def bracket_basis(self, i: int, j: int) -> dict[int, Fraction]:
        """[e_i, e_j] as a sparse coordinate dictionary (0-based indices)."""
        if i == j:
            return {}
        if i < j:
            return dict(self._table.get((i, j), {}))
        return {k: -c for k, c in self._table.get((j, i), {}).items()}

    def structure_constant(self, i: int, j: int, k: int) -> Fraction:
        return self.bracket_basis(i, j).get(k, Fraction(0))

    def bracket(self, u: Sequence, v: Sequence) -> tuple[Fraction, ...]:
        """Bilinear extension of the bracket to coordinate vectors."""
        if len(u) != self.dim or len(v) != self.dim:
            raise ValueError("coordinate vector length mismatch")
        u = [Fraction(x) for x in u]
        v = [Fraction(x) for x in v]
        out = [Fraction(0)] * self.dim
        for (i, j), coords in self._table.items():
            factor = u[i] * v[j] - u[j] * v[i]
            if factor:
                for k, c in coords.items():
                    out[k] += factor * c
        return tuple(out)

    def nontrivial_pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self._table))

    def is_abelian(self) -> bool:
        return not self._table

    # -- validation ------------------------------------------------------

    def _check_jacobi(self):
        n = self.dim
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    acc = [Fraction(0)] * n
                    for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                        inner = self.bracket_basis(b, c)
                        for l, cl in inner.items():
                            for m, cm in self.bracket_basis(a, l).items():
                                acc[m] += cl * cm
                    if any(acc):
                        raise JacobiError(
                            f"Jacobi identity fails on basis triple ({i + 1}, {j + 1}, {k + 1})"
                        )

    def __eq__(self, other):
        return (
            isinstance(other, LieAlgebra)
            and self.dim == other.dim
            and self._table == other._table
        )

    def __hash__(self):
        frozen = tuple(
            (pair, tuple(sorted(coords.items()))) for pair, coords in sorted(self._table.items())
        )
        return hash((self.dim, frozen))

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, names={list(self.names)})"


# -- built-in algebras ----------------------------------------------------


def gl(n: int) -> LieAlgebra:
    """gl(n) on the matrix-unit basis E_ij in row-major order.

    For n = 2 this is the order (E11, E12, E21, E22).
    """
    if n < 2:
        raise ValueError("gl(n) requires n >= 2")
    names = [f"E{i}{j}" for i in range(1, n + 1) for j in range(1, n + 1)]
    index = {(i, j): (i - 1) * n + (j - 1) for i in range(1, n + 1) for j in range(1, n + 1)}
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    pairs = list(index)
    for a in range(len(pairs)):
        for b in range(a + 1, len(pairs)):
            (i, j), (k, l) = pairs[a], pairs[b]
            coords: dict[int, Fraction] = {}
            if j == k:
                coords[index[(i, l)]] = coords.get(index[(i, l)], Fraction(0)) + 1
            if l == i:
                coords[index[(k, j)]] = coords.get(index[(k, j)], Fraction(0)) - 1
            if coords:
                brackets[(index[pairs[a]], index[pairs[b]])] = coords
    return LieAlgebra(n * n, brackets, names)


def upper_triangular(n: int) -> LieAlgebra:
    """u(n): upper triangular matrices, basis E_ij (i <= j) in lex order."""
    if n < 2:
        raise ValueError("u(n) requires n >= 2")
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    names = [f"E{i}{j}" for i, j in pairs]
    index = {p: q for q, p in enumerate(pairs)}
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    for a in range(len(pairs)):
        for b in range(a + 1, len(pairs)):
            (i, j), (k, l) = pairs[a], pairs[b]
            coords: dict[int, Fraction] = {}
            if j == k:
                coords[index[(i, l)]] = coords.get(index[(i, l)], Fraction(0)) + 1
            if l == i:
                coords[index[(k, j)]] = coords.get(index[(k, j)], Fraction(0)) - 1
            if coords:
                brackets[(a, b)] = coords
    return LieAlgebra(len(pairs), brackets, names)


def heisenberg(n: int) -> LieAlgebra:
    """The Heisenberg algebra of dimension 2n+1, basis (z, x1, y1, ..., xn, yn)."""
    if n < 1:
        raise ValueError("heisenberg(n) requires n >= 1")
    names = ["z"]
    for i in range(1, n + 1):
        names += [f"x{i}", f"y{i}"]
    brackets = {}
    for i in range(n):
        # [x_i, y_i] = z
        brackets[(1 + 2 * i, 2 + 2 * i)] = {0: Fraction(1)}
    return LieAlgebra(2 * n + 1, brackets, names)


def _matrix_unit(n: int, i: int, j: int) -> Matrix:
    rows = [[0] * n for _ in range(n)]
    rows[i - 1][j - 1] = 1
    return Matrix(rows)


def _sl_basis(n: int) -> tuple[list[Matrix], list[str]]:
    mats, names = [], []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                mats.append(_matrix_unit(n, i, j))
                names.append(f"E{i}{j}")
    for i in range(1, n):
        mats.append(_matrix_unit(n, i, i) - _matrix_unit(n, i + 1, i + 1))
        names.append(f"H{i}")
    return mats, names


def from_matrix_basis(mats: Sequence[Matrix], names: Sequence[str] | None = None) -> LieAlgebra:
    """Build a structure-constant table from a basis of concrete matrices.

    Commutators are expanded in the given basis by exact linear solving;
    raises if the span is not closed under the commutator.
    """
    dim = len(mats)
    if dim < 1:
        raise ValueError("empty matrix basis")
    flat_cols = Matrix(list(zip(*[
        [m[r][c] for r in range(m.nrows) for c in range(m.ncols)] for m in mats
    ])))
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    for a in range(dim):
        for b in range(a + 1, dim):
            comm = mats[a] * mats[b] - mats[b] * mats[a]
            target = [comm[r][c] for r in range(comm.nrows) for c in range(comm.ncols)]
            coeffs = solve(flat_cols, target)
            if coeffs is None:
                raise ValueError(f"commutator of basis elements {a + 1}, {b + 1} leaves the span")
            coords = {k: c for k, c in enumerate(coeffs) if c}
            if coords:
                brackets[(a, b)] = coords
    return LieAlgebra(dim, brackets, names)


def sl(n: int) -> LieAlgebra:
    """sl(n): off-diagonal matrix units plus H_i = E_ii - E_{i+1,i+1}."""
    if n < 2:
        raise ValueError("sl(n) requires n >= 2")
    mats, names = _sl_basis(n)
    return from_matrix_basis(mats, names)


def gl_slz(n: int) -> LieAlgebra:
    """gl(n) on a basis listing sl(n) first and the central identity last."""
    if n < 2:
        raise ValueError("gl_slz(n) requires n >= 2")
    mats, names = _sl_basis(n)
    mats.append(Matrix.identity(n))
    names.append("z")
    return from_matrix_basis(mats, names)


# -- subspace helpers ------------------------------------------------------


def derived_subalgebra(algebra: LieAlgebra) -> list[tuple[Fraction, ...]]:
    """A reduced-echelon basis of the span of all basis brackets."""
    rows = []
    for (i, j) in algebra.nontrivial_pairs():
        coords = algebra.bracket_basis(i, j)
        rows.append([coords.get(k, Fraction(0)) for k in range(algebra.dim)])
    reduced, _ = rref(rows)
    return [tuple(row) for row in reduced]


def center(algebra: LieAlgebra) -> list[tuple[Fraction, ...]]:
    """A basis of the center: vectors bracketing to zero with every e_j."""
    n = algebra.dim
    rows = []
    for j in range(n):
        for m in range(n):
            rows.append([algebra.structure_constant(i, j, m) for i in range(n)])
    return nullspace(rows, n)


# -- file ingestion ---------------------------------------------------------


def _parse_fraction(text: str, lineno: int) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise LieFileError(f"line {lineno}: bad rational {text!r}") from None


def load_lie_algebra(path) -> LieAlgebra:
    """Read the structure-constant text format.

    Format: a ``dim N`` header, an optional ``basis name1 ... nameN`` line,
    then ``bracket i j : k1 c1, k2 c2, ...`` lines with 1-based indices.
    Omitted pairs have zero bracket.  Blank lines and ``#`` comments are
    ignored.
    """
    dim: int | None = None
    names: tuple[str, ...] | None = None
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            fields = line.split()
            if fields[0] == "dim":
                if dim is not None:
                    raise LieFileError(f"line {lineno}: duplicate dim header")
                if len(fields) != 2 or not fields[1].isdigit() or int(fields[1]) < 1:
                    raise LieFileError(f"line {lineno}: expected 'dim N' with N >= 1")
                dim = int(fields[1])
            elif fields[0] == "basis":
                if dim is None:
                    raise LieFileError(f"line {lineno}: basis before dim header")
                if len(fields) != dim + 1:
                    raise LieFileError(f"line {lineno}: expected {dim} basis names")
                names = tuple(fields[1:])
            elif fields[0] == "bracket":
                if dim is None:
                    raise LieFileError(f"line {lineno}: bracket before dim header")
                head, _, tail = line.partition(":")
                parts = head.split()
                if len(parts) != 3 or not tail.strip():
                    raise LieFileError(
                        f"line {lineno}: expected 'bracket i j : k1 c1, ...'"
                    )
                try:
                    i, j = int(parts[1]), int(parts[2])
                except ValueError:
                    raise LieFileError(f"line {lineno}: bad bracket indices") from None
                if not (1 <= i <= dim and 1 <= j <= dim):
                    raise LieFileError(f"line {lineno}: bracket indices out of range")
                coords: dict[int, Fraction] = {}
                for chunk in tail.split(","):
                    kv = chunk.split()
                    if len(kv) != 2:
                        raise LieFileError(
                            f"line {lineno}: expected 'k c' pairs separated by commas"
                        )
                    k = kv[0]
                    if not k.isdigit() or not 1 <= int(k) <= dim:
                        raise LieFileError(f"line {lineno}: coordinate index {k!r} out of range")
                    coords[int(k) - 1] = _parse_fraction(kv[1], lineno)
                key = (i - 1, j - 1)
                if key in brackets:
                    raise LieFileError(f"line {lineno}: duplicate bracket {i} {j}")
                # a (j, i) duplicate is kept; the constructor checks it
                # against antisymmetry
                brackets[key] = coords
    if dim is None:
        raise LieFileError("missing dim header")
    return LieAlgebra(dim, brackets, names)
