"""Hom-Lie structure varieties: defining ideals, classification, and
symbolic verification of parametric families.

A linear map D with D(e_i) = sum_u x_iu e_u is a Hom-Lie structure when the
Hom-Jacobi identity [D(x),[y,z]] + [D(y),[z,x]] + [D(z),[x,y]] = 0 holds,
and multiplicative when D is additionally an algebra homomorphism.  The
first condition is linear in the x_iu, the second quadratic.

Matrices use the column-image convention throughout, so the coordinate
x_ij of a concrete matrix sits at row j, column i.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .groebner import exact_divide, normal_form
from .ideals import Ideal
from .liealg import LieAlgebra
from .linalg import Matrix, nullspace
from .poly import Polynomial, PolyRing

__all__ = [
    "Classification",
    "HomLieSystem",
    "ParamMatrix",
    "UncoveredDenominatorError",
    "VerificationReport",
    "classify_matrix",
    "component_dimension",
    "coordinate_ring",
    "generate_homlie_ideal",
    "hom_jacobi_solution_space",
    "verify_family",
]


class UncoveredDenominatorError(ValueError):
    """An entry denominator is not a product of the declared nonzero factors."""


def coordinate_ring(algebra: LieAlgebra, kind: str = "grlex") -> PolyRing:
    """The ring in the n^2 coordinates x_ij of a linear map on the algebra."""
    n = algebra.dim
    names = [f"x{i}{j}" for i in range(1, n + 1) for j in range(1, n + 1)]
    return PolyRing(names, kind)


@dataclass(frozen=True)
class HomLieSystem:
    """The generated defining equations of HLie(g) / HLie_m(g).

    ``jacobi`` holds the linear Hom-Jacobi coefficients, ``mult`` the
    quadratic homomorphism coefficients (empty unless requested).
    """

    algebra: LieAlgebra
    ring: PolyRing
    jacobi: tuple[Polynomial, ...]
    mult: tuple[Polynomial, ...]

    def __post_init__(self):
        for g in self.jacobi:
            if g.total_degree() != 1 or g.coefficient((0,) * self.ring.nvars):
                raise AssertionError("Hom-Jacobi generator is not homogeneous linear")
        for g in self.mult:
            if g.total_degree() > 2:
                raise AssertionError("homomorphism generator exceeds degree 2")

    @property
    def generators(self) -> tuple[Polynomial, ...]:
        return self.jacobi + self.mult

    def ideal(self) -> Ideal:
        return Ideal(self.ring, self.generators)


def _var_index(n: int, i: int, j: int) -> int:
    # x_ij: coefficient of e_j in D(e_i); both 1-based
    return (i - 1) * n + (j - 1)


def generate_homlie_ideal(
    algebra: LieAlgebra,
    multiplicative: bool = True,
    ring: PolyRing | None = None,
) -> HomLieSystem:
    """Emit the defining polynomials of the Hom-Lie variety of ``algebra``.

    Triples and pairs are walked in ascending order with coordinates
    ascending, and zero polynomials are dropped, so the output is
    deterministic.
    """
    n = algebra.dim
    R = ring or coordinate_ring(algebra)
    if R.nvars != n * n:
        raise ValueError("ring size does not match the algebra")
    jacobi: list[Polynomial] = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j + 1, n + 1):
                coeffs: list[dict] = [dict() for _ in range(n)]
                for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                    inner = algebra.bracket_basis(b - 1, c - 1)
                    for l, cl in inner.items():
                        for u in range(n):
                            outer = algebra.bracket_basis(u, l)
                            if not outer:
                                continue
                            exps = [0] * (n * n)
                            exps[_var_index(n, a, u + 1)] = 1
                            key = tuple(exps)
                            for m, cm in outer.items():
                                acc = coeffs[m]
                                acc[key] = acc.get(key, Fraction(0)) + cl * cm
                for m in range(n):
                    poly = R.poly(coeffs[m])
                    if poly:
                        jacobi.append(poly)
    mult: list[Polynomial] = []
    if multiplicative:
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                coeffs = [dict() for _ in range(n)]
                for l, cl in algebra.bracket_basis(i - 1, j - 1).items():
                    for m in range(1, n + 1):
                        exps = [0] * (n * n)
                        exps[_var_index(n, l + 1, m)] = 1
                        acc = coeffs[m - 1]
                        acc[tuple(exps)] = acc.get(tuple(exps), Fraction(0)) + cl
                for u in range(n):
                    for v in range(n):
                        if u == v:
                            continue
                        outer = algebra.bracket_basis(u, v)
                        if not outer:
                            continue
                        exps = [0] * (n * n)
                        exps[_var_index(n, i, u + 1)] += 1
                        exps[_var_index(n, j, v + 1)] += 1
                        key = tuple(exps)
                        for m, cm in outer.items():
                            acc = coeffs[m]
                            acc[key] = acc.get(key, Fraction(0)) - cm
                for m in range(n):
                    poly = R.poly(coeffs[m])
                    if poly:
                        mult.append(poly)
    return HomLieSystem(algebra, R, tuple(jacobi), tuple(mult))


# -- classification of concrete matrices -----------------------------------


@dataclass(frozen=True)
class Classification:
    """Where a concrete transform sits in the containment chain.

    The four flags are conjunctive by definition: involutive and regular
    imply multiplicative, which implies hom_lie.
    """

    hom_lie: bool
    multiplicative: bool
    regular: bool
    involutive: bool
    determinant: Fraction


def classify_matrix(algebra: LieAlgebra, transform: Matrix) -> Classification:
    n = algebra.dim
    if not transform.is_square() or transform.nrows != n:
        raise ValueError(
            f"matrix size {transform.nrows} does not match algebra dimension {n}"
        )
    images = [transform.column(i) for i in range(n)]

    hom_lie = True
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                acc = [Fraction(0)] * n
                for a, (b, c) in ((i, (j, k)), (j, (k, i)), (k, (i, j))):
                    inner = algebra.bracket_basis(b, c)
                    if not inner:
                        continue
                    vec = [Fraction(0)] * n
                    for l, cl in inner.items():
                        vec[l] = cl
                    for m, val in enumerate(algebra.bracket(images[a], vec)):
                        acc[m] += val
                if any(acc):
                    hom_lie = False
                    break
            if not hom_lie:
                break
        if not hom_lie:
            break

    multiplicative = hom_lie
    if multiplicative:
        for i in range(n):
            for j in range(i + 1, n):
                inner = algebra.bracket_basis(i, j)
                vec = [Fraction(0)] * n
                for l, cl in inner.items():
                    vec[l] = cl
                if transform.apply(vec) != algebra.bracket(images[i], images[j]):
                    multiplicative = False
                    break
            if not multiplicative:
                break

    det = transform.det()
    regular = multiplicative and det != 0
    involutive = multiplicative and (transform * transform).is_identity()
    return Classification(hom_lie, multiplicative, regular, involutive, det)


def first_failing_equation(
    algebra: LieAlgebra, transform: Matrix
) -> tuple[str, int, Fraction] | None:
    """The first defining equation that does not vanish at the matrix.

    Returns (kind, index, value) or None when the matrix is a
    multiplicative Hom-Lie structure.
    """
    n = algebra.dim
    if transform.nrows != n or not transform.is_square():
        raise ValueError("matrix size does not match the algebra")
    system = generate_homlie_ideal(algebra, multiplicative=True)
    point = {
        f"x{i}{j}": transform[j - 1][i - 1]
        for i in range(1, n + 1)
        for j in range(1, n + 1)
    }
    for kind, polys in (("hom_jacobi", system.jacobi), ("multiplicative", system.mult)):
        for index, poly in enumerate(polys):
            value = poly.evaluate(point)
            if value:
                return kind, index, value
    return None


def hom_jacobi_solution_space(algebra: LieAlgebra) -> list[Matrix]:
    """A basis of the linear space of all Hom-Lie structures on the algebra."""
    n = algebra.dim
    system = generate_homlie_ideal(algebra, multiplicative=False)
    rows = []
    for poly in system.jacobi:
        row = [Fraction(0)] * (n * n)
        for exps, coeff in poly.terms:
            idx = next(i for i, e in enumerate(exps) if e)
            row[idx] = coeff
        rows.append(row)
    basis = []
    for vec in nullspace(rows, n * n):
        # unknown (i-1)*n + (j-1) is x_ij, stored at row j-1, column i-1
        rows_m = [[vec[i * n + r] for i in range(n)] for r in range(n)]
        basis.append(Matrix(rows_m))
    return basis


# -- parametric families ----------------------------------------------------


class ParamMatrix:
    """A square matrix of polynomial fractions in named parameters.

    Every entry denominator must be a product of the declared
    ``denominators`` (asserted-nonzero parameter polynomials); entries are
    stored as a numerator plus a power vector over those factors.
    """

    __slots__ = ("size", "ring", "entries", "constraints", "denominators")

    def __init__(
        self,
        params: Sequence[str],
        rows: Sequence[Sequence],
        constraints: Sequence[Polynomial | str] = (),
        denominators: Sequence[Polynomial | str] = (),
        ring: PolyRing | None = None,
    ):
        self.ring = ring or PolyRing(tuple(params), "grlex")
        self.denominators = tuple(self._to_poly(d) for d in denominators)
        for d in self.denominators:
            if not d or d.is_constant():
                raise ValueError("excluded denominators must be nonconstant")
        self.constraints = tuple(self._to_poly(c) for c in constraints)
        size = len(rows)
        if any(len(r) != size for r in rows):
            raise ValueError("matrix must be square")
        self.size = size
        self.entries = tuple(
            tuple(self._to_entry(cell) for cell in row) for row in rows
        )

    def _to_poly(self, value) -> Polynomial:
        if isinstance(value, Polynomial):
            if value.ring != self.ring:
                raise ValueError("polynomial from a different parameter ring")
            return value
        if isinstance(value, (int, Fraction)):
            return self.ring.const(value)
        return self.ring.parse(str(value))

    def _to_entry(self, cell) -> tuple[Polynomial, tuple[int, ...]]:
        if isinstance(cell, tuple):
            num, den = cell
            return self._factor_denominator(self._to_poly(num), self._to_poly(den))
        if isinstance(cell, str):
            num_text, den_text = _split_fraction(cell)
            num = self.ring.parse(num_text)
            if den_text is None:
                return num, (0,) * len(self.denominators)
            return self._factor_denominator(num, self.ring.parse(den_text))
        return self._to_poly(cell), (0,) * len(self.denominators)

    def _factor_denominator(
        self, num: Polynomial, den: Polynomial
    ) -> tuple[Polynomial, tuple[int, ...]]:
        if not den:
            raise ZeroDivisionError("zero denominator in a matrix entry")
        powers = [0] * len(self.denominators)
        changed = True
        while changed and not den.is_constant():
            changed = False
            for idx, factor in enumerate(self.denominators):
                try:
                    den = exact_divide(den, factor)
                except ValueError:
                    continue
                powers[idx] += 1
                changed = True
                break
        if not den.is_constant():
            raise UncoveredDenominatorError(
                f"denominator factor {den} is not among the declared nonzero factors"
            )
        scale = den.constant_value()
        return num * (Fraction(1) / scale), tuple(powers)

    def entry(self, row: int, col: int) -> tuple[Polynomial, tuple[int, ...]]:
        return self.entries[row][col]

    def parameter_names(self) -> tuple[str, ...]:
        return self.ring.names

    def constraint_ideal(self) -> Ideal:
        return Ideal(self.ring, self.constraints)

    def specialize(self, values: Mapping[str, Fraction | int]) -> Matrix:
        """Evaluate at a rational parameter point.

        The point must satisfy every constraint and keep every declared
        denominator nonzero.
        """
        point = {nm: Fraction(values[nm]) for nm in self.ring.names}
        for c in self.constraints:
            if c.evaluate(point) != 0:
                raise ValueError(f"constraint {c} violated at {dict(point)}")
        den_vals = []
        for d in self.denominators:
            val = d.evaluate(point)
            if val == 0:
                raise ZeroDivisionError(f"excluded denominator {d} vanishes at the point")
            den_vals.append(val)
        rows = []
        for r in range(self.size):
            row = []
            for c in range(self.size):
                num, powers = self.entries[r][c]
                val = num.evaluate(point)
                for dv, p in zip(den_vals, powers):
                    if p:
                        val /= dv**p
                row.append(val)
            rows.append(row)
        return Matrix(rows)

    def __repr__(self):
        return f"ParamMatrix(size={self.size}, params={list(self.ring.names)})"


def _split_fraction(cell: str) -> tuple[str, str | None]:
    cell = cell.strip()
    split_at = cell.find("/(")
    if split_at < 0:
        return cell, None
    if not cell.endswith(")"):
        raise ValueError(f"unbalanced denominator parentheses in {cell!r}")
    num = cell[:split_at].strip()
    den = cell[split_at + 2 : -1].strip()
    if num.startswith("(") and num.endswith(")"):
        num = num[1:-1]
    return num, den


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of substituting a family into the defining equations."""

    ok: bool
    equations_checked: int
    failures: tuple[tuple[str, int, Polynomial], ...]

    def first_failure(self):
        return self.failures[0] if self.failures else None


def verify_family(
    algebra: LieAlgebra,
    family: ParamMatrix,
    max_pairs: int | None = None,
) -> VerificationReport:
    """Check symbolically that every member of the family is multiplicative
    Hom-Lie on the algebra.

    Each defining equation is evaluated at the family entries, cleared by
    the minimal power of the declared denominators, and reduced modulo the
    constraint ideal; the family verifies when every residue is zero.
    """
    n = algebra.dim
    if family.size != n:
        raise ValueError(f"family size {family.size} does not match dimension {n}")
    system = generate_homlie_ideal(algebra, multiplicative=True)
    basis = family.constraint_ideal().groebner(max_pairs=max_pairs)

    # x_ij (1-based) is the entry at row j-1, column i-1
    entry_of_var = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            entry_of_var.append(family.entry(j - 1, i - 1))

    nden = len(family.denominators)
    failures = []
    checked = 0
    for kind, polys in (("hom_jacobi", system.jacobi), ("multiplicative", system.mult)):
        for index, poly in enumerate(polys):
            checked += 1
            terms = []
            for exps, coeff in poly.terms:
                num = family.ring.const(coeff)
                powers = [0] * nden
                for slot, e in enumerate(exps):
                    if not e:
                        continue
                    cell_num, cell_pow = entry_of_var[slot]
                    for _ in range(e):
                        num = num * cell_num
                    for d in range(nden):
                        powers[d] += e * cell_pow[d]
                terms.append((num, powers))
            common = [max((p[d] for _, p in terms), default=0) for d in range(nden)]
            total = family.ring.zero
            for num, powers in terms:
                scaled = num
                for d in range(nden):
                    for _ in range(common[d] - powers[d]):
                        scaled = scaled * family.denominators[d]
                total = total + scaled
            residue = normal_form(total, basis) if basis else total
            if residue:
                failures.append((kind, index, residue))
    return VerificationReport(not failures, checked, tuple(failures))


def component_dimension(family: ParamMatrix, max_pairs: int | None = None) -> int:
    """Dimension of the family's parameter variety.

    Parameters are coordinates, so this is the Krull dimension of the
    constraint ideal in the parameter ring; inconsistent constraints raise
    :class:`homlie.ideals.WholeRingError`.
    """
    return family.constraint_ideal().dimension(max_pairs=max_pairs)


def load_param_matrix(path) -> ParamMatrix:
    """Read the parametric-matrix file format.

    A ``params`` header names the parameters; ``constraint`` and
    ``denominator`` lines each carry one polynomial; ``matrix N`` is
    followed by N rows of N whitespace-separated entries, each a
    polynomial or ``p/(q)`` fraction.
    """
    params: list[str] | None = None
    constraints: list[str] = []
    denominators: list[str] = []
    size: int | None = None
    rows: list[list[str]] = []
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if size is not None and len(rows) < size:
                cells = line.split()
                if len(cells) != size:
                    raise ValueError(f"line {lineno}: expected {size} entries")
                rows.append(cells)
                continue
            head, _, tail = line.partition(" ")
            tail = tail.strip()
            if head == "params":
                params = tail.split()
            elif head == "constraint":
                constraints.append(tail)
            elif head == "denominator":
                denominators.append(tail)
            elif head == "matrix":
                if params is None:
                    raise ValueError(f"line {lineno}: matrix before params header")
                if not tail.isdigit() or int(tail) < 1:
                    raise ValueError(f"line {lineno}: expected 'matrix N'")
                size = int(tail)
            else:
                raise ValueError(f"line {lineno}: unrecognized directive {head!r}")
    if params is None or size is None:
        raise ValueError("missing params or matrix header")
    if len(rows) != size:
        raise ValueError(f"expected {size} matrix rows, found {len(rows)}")
    return ParamMatrix(params, rows, constraints, denominators)
