"""Derivation spaces of a multiplicative Hom-Lie structure and the Hilbert
series of their dimension sequence.

For a structure D on g and k >= 0, the k-th derivation space consists of the
linear maps delta with delta.D = D.delta and
delta([x, y]) = [delta(x), D^k(y)] + [D^k(x), delta(y)];
D^0 is the identity.  The Hilbert series sums dim(Der_k) * t^k and has a
closed rational form when D is invertible, nilpotent, or satisfies
D^m = D.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .liealg import LieAlgebra
from .linalg import Matrix, nullspace, rank
from .varieties import classify_matrix

__all__ = [
    "CertificationError",
    "DerivationSpace",
    "HilbertSeries",
    "PowerProfile",
    "derivation_equations_hold",
    "derivation_space",
    "hilbert_series",
    "matrix_power_profile",
    "rho_map",
]


class CertificationError(RuntimeError):
    """A map that must satisfy the derivation equations failed the recheck."""


@dataclass(frozen=True)
class DerivationSpace:
    """A basis of the k-th derivation space of (algebra, transform)."""

    algebra: LieAlgebra
    transform: Matrix
    power: int
    basis: tuple[Matrix, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)


def _equation_rows(algebra: LieAlgebra, D: Matrix, k: int) -> list[list[Fraction]]:
    n = algebra.dim
    Dk = D**k
    rows: list[list[Fraction]] = []
    # commutation: (delta D - D delta)[r][c] = 0
    for r in range(n):
        for c in range(n):
            row = [Fraction(0)] * (n * n)
            for s in range(n):
                row[r * n + s] += D[s][c]
                row[s * n + c] -= D[r][s]
            rows.append(row)
    # twisted Leibniz rule on basis pairs
    unit = [Fraction(0)] * n
    for i in range(n):
        for j in range(i + 1, n):
            dk_i = Dk.column(i)
            dk_j = Dk.column(j)
            bracket_ij = algebra.bracket_basis(i, j)
            for m in range(n):
                row = [Fraction(0)] * (n * n)
                for l, cl in bracket_ij.items():
                    row[m * n + l] += cl
                for p in range(n):
                    e_p = unit.copy()
                    e_p[p] = Fraction(1)
                    row[p * n + i] -= algebra.bracket(e_p, dk_j)[m]
                    row[p * n + j] -= algebra.bracket(dk_i, e_p)[m]
                rows.append(row)
    return rows


def derivation_space(
    algebra: LieAlgebra,
    transform: Matrix,
    k: int,
    check: bool = True,
) -> DerivationSpace:
    """Solve the exact linear system for the k-th derivation space.

    The basis comes back in reduced echelon order over the matrix entries
    (row-major), so it is reproducible.  ``transform`` must be a
    multiplicative Hom-Lie structure unless ``check`` is disabled.
    """
    if k < 0:
        raise ValueError("derivation power must be non-negative")
    if check:
        record = classify_matrix(algebra, transform)
        if not record.multiplicative:
            raise ValueError("transform is not a multiplicative Hom-Lie structure")
    n = algebra.dim
    rows = _equation_rows(algebra, transform, k)
    basis = []
    for vec in nullspace(rows, n * n):
        basis.append(Matrix([[vec[r * n + c] for c in range(n)] for r in range(n)]))
    return DerivationSpace(algebra, transform, k, tuple(basis))


def derivation_equations_hold(
    algebra: LieAlgebra,
    transform: Matrix,
    k: int,
    candidate: Matrix,
) -> bool:
    """Recheck the defining equations by direct substitution.

    Independent of the nullspace solver: commutation and the twisted
    Leibniz rule are evaluated on all basis pairs.
    """
    n = algebra.dim
    if candidate.nrows != n or transform.nrows != n:
        raise ValueError("matrix size mismatch")
    if candidate * transform != transform * candidate:
        return False
    Dk = transform**k
    for i in range(n):
        for j in range(i + 1, n):
            bracket_ij = algebra.bracket_basis(i, j)
            vec = [Fraction(0)] * n
            for l, cl in bracket_ij.items():
                vec[l] = cl
            lhs = candidate.apply(vec)
            rhs1 = algebra.bracket(candidate.column(i), Dk.column(j))
            rhs2 = algebra.bracket(Dk.column(i), candidate.column(j))
            if lhs != tuple(a + b for a, b in zip(rhs1, rhs2)):
                return False
    return True


def rho_map(space: DerivationSpace, transform: Matrix) -> DerivationSpace:
    """The image of a derivation space under left composition with D.

    Each composite is certified against the (k+1)-st equations before a
    linearly independent subset is selected; the image need not span the
    whole next space.
    """
    if transform != space.transform:
        raise ValueError("rho_map must compose with the space's own transform")
    algebra = space.algebra
    k = space.power
    images = [transform * delta for delta in space.basis]
    for img in images:
        if not derivation_equations_hold(algebra, transform, k + 1, img):
            raise CertificationError(
                "composite map violates the next derivation equations"
            )
    independent: list[Matrix] = []
    flat_rows: list[list[Fraction]] = []
    for img in images:
        trial = flat_rows + [[img[r][c] for r in range(img.nrows) for c in range(img.ncols)]]
        if rank(trial) > len(flat_rows):
            independent.append(img)
            flat_rows = trial
    return DerivationSpace(algebra, transform, k + 1, tuple(independent))


# -- power profiles and Hilbert series --------------------------------------


@dataclass(frozen=True)
class PowerProfile:
    """First matrix power relation found: invertible, D^n = 0, or D^m = D."""

    kind: str  # "invertible" | "nilpotent" | "periodic" | "none"
    exponent: int | None


def matrix_power_profile(transform: Matrix, budget: int) -> PowerProfile:
    """Detect the first power relation, checking invertibility first.

    Nilpotency is searched up to the matrix size (the Cayley-Hamilton
    bound), the relation D^m = D up to ``budget``.
    """
    if budget < 1:
        raise ValueError("budget must be at least 1")
    if transform.det() != 0:
        return PowerProfile("invertible", None)
    n = transform.nrows
    power = transform
    for e in range(1, n + 1):
        if e > 1:
            power = power * transform
        if all(v == 0 for row in power.rows for v in row):
            return PowerProfile("nilpotent", e)
    power = transform
    for m in range(2, budget + 1):
        power = power * transform
        if power == transform:
            return PowerProfile("periodic", m)
    return PowerProfile("none", None)


@dataclass(frozen=True)
class HilbertSeries:
    """A closed form numerator/(1 - t^period), or a truncated prefix.

    ``prefix`` holds the dimensions that were computed directly; for the
    truncated case it is the entire payload and ``period`` is None.
    """

    case: str  # "invertible" | "nilpotent" | "periodic" | "truncated"
    numerator: tuple[int, ...]
    period: int | None
    prefix: tuple[int, ...]

    def coefficients(self, upto: int) -> list[int]:
        """Series coefficients l_0 .. l_upto."""
        if self.case == "truncated":
            if upto >= len(self.prefix):
                raise ValueError("truncated series: no closed form beyond the prefix")
            return list(self.prefix[: upto + 1])
        out = []
        for j in range(upto + 1):
            total = 0
            i = j
            while i >= 0:
                if i < len(self.numerator):
                    total += self.numerator[i]
                i -= self.period
            out.append(total)
        return out

    def __str__(self):
        if self.case == "truncated":
            return "truncated: [" + ", ".join(str(v) for v in self.prefix) + "]"
        chunks = []
        for e, c in enumerate(self.numerator):
            if c == 0 and len(self.numerator) > 1:
                continue
            mono = "1" if e == 0 else ("t" if e == 1 else f"t^{e}")
            body = str(abs(c)) if e == 0 else (mono if abs(c) == 1 else f"{abs(c)}*{mono}")
            if not chunks:
                chunks.append(("-" if c < 0 else "") + body)
            else:
                chunks.append((" - " if c < 0 else " + ") + body)
        numerator = "".join(chunks) or "0"
        return f"({numerator})/(1 - t^{self.period})"


def hilbert_series(
    algebra: LieAlgebra,
    transform: Matrix,
    budget: int | None = None,
) -> HilbertSeries:
    """Closed form for the derivation dimension series, by case analysis.

    Invertibility is decided first, then nilpotency, then the relation
    D^m = D; when none holds within the budget the result is a truncated
    coefficient list rather than an error.
    """
    n = algebra.dim
    budget = budget if budget is not None else 2 * n + 2
    if budget < n:
        raise ValueError(f"budget must be at least the dimension {n}")
    record = classify_matrix(algebra, transform)
    if not record.multiplicative:
        raise ValueError("transform is not a multiplicative Hom-Lie structure")

    def dims(upto: int) -> list[int]:
        return [
            derivation_space(algebra, transform, k, check=False).dimension
            for k in range(upto + 1)
        ]

    profile = matrix_power_profile(transform, budget)
    if profile.kind == "invertible":
        l0 = derivation_space(algebra, transform, 0, check=False).dimension
        return HilbertSeries("invertible", (l0,), 1, (l0,))
    if profile.kind == "nilpotent":
        nil = profile.exponent
        ls = dims(nil)
        numerator = [ls[0]]
        for k in range(1, nil + 1):
            numerator.append(ls[k] - ls[k - 1])
        return HilbertSeries("nilpotent", tuple(numerator), 1, tuple(ls))
    if profile.kind == "periodic":
        m = profile.exponent
        ls = dims(m - 1)
        numerator = [ls[0]]
        for k in range(1, m - 1):
            numerator.append(ls[k])
        numerator.append(ls[m - 1] - ls[0])
        return HilbertSeries("periodic", tuple(numerator), m - 1, tuple(ls))
    ls = dims(budget)
    return HilbertSeries("truncated", (), None, tuple(ls))
