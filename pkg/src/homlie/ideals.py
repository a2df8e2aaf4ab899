"""Polynomial ideals: product, intersection, colon, radical membership,
containment, and Krull dimension.

Intersection follows the auxiliary-variable construction: adjoin a fresh
variable ``t`` with highest lex precedence, compute the basis of
``(1-t)*I + t*J``, and keep the elements free of ``t``.  Radical membership
adjoins ``y`` and asks whether ``1`` lies in ``I + (1 - y*f)``.
"""

from __future__ import annotations

from typing import Iterable

from .groebner import exact_divide, groebner_basis, is_unit_basis, normal_form
from .poly import MonomialOrder, Polynomial, PolyRing, RingMismatchError

__all__ = [
    "ColonDivisionError",
    "Ideal",
    "WholeRingError",
    "radical_membership",
]


class WholeRingError(ValueError):
    """The requested quantity is undefined for the unit ideal."""


class ColonDivisionError(RuntimeError):
    """A colon-ideal basis element failed exact division; this indicates an
    internal inconsistency and should be unreachable."""


class Ideal:
    """An ideal given by generators, with a cached reduced Groebner basis.

    The cache is keyed by ordering; recomputation under the same ordering is
    idempotent, so concurrent use is safe.
    """

    __slots__ = ("ring", "gens", "_cache")

    def __init__(self, ring: PolyRing, gens: Iterable[Polynomial] = ()):
        self.ring = ring
        converted = []
        for g in gens:
            if g.ring != ring:
                raise RingMismatchError("generator from a different ring")
            converted.append(g)
        self.gens = tuple(converted)
        self._cache: tuple[MonomialOrder, tuple[Polynomial, ...]] | None = None

    def groebner(
        self,
        order: MonomialOrder | None = None,
        max_pairs: int | None = None,
    ) -> tuple[Polynomial, ...]:
        order = order or self.ring.order
        cached = self._cache
        if cached is not None and cached[0] == order:
            return cached[1]
        basis = groebner_basis(self.gens, order, max_pairs)
        for g in self.gens:
            if normal_form(g, basis, order):
                raise AssertionError("generator does not reduce to zero mod its own basis")
        self._cache = (order, basis)
        return basis

    def cached_basis(self) -> tuple[Polynomial, ...] | None:
        cached = self._cache
        if cached is not None and cached[0] == self.ring.order:
            return cached[1]
        return None

    def __contains__(self, f: Polynomial) -> bool:
        if f.ring != self.ring:
            raise RingMismatchError("element from a different ring")
        return not normal_form(f, self.groebner())

    def is_zero(self) -> bool:
        return not self.groebner()

    def is_whole_ring(self) -> bool:
        return is_unit_basis(self.groebner())

    def same_ideal(self, other: "Ideal") -> bool:
        if other.ring != self.ring:
            raise RingMismatchError("ideals from different rings")
        return self.groebner() == other.groebner()

    def product(self, other: "Ideal") -> "Ideal":
        """Generated by all pairwise products of the two generator lists."""
        if other.ring != self.ring:
            raise RingMismatchError("ideals from different rings")
        return Ideal(self.ring, tuple(f * g for f in self.gens for g in other.gens))

    def intersection(
        self,
        other: "Ideal",
        order: MonomialOrder | None = None,
        max_pairs: int | None = None,
    ) -> "Ideal":
        """Eliminate the auxiliary variable from (1-t)*I + t*J.

        ``order``, when given, must be lexicographic; the fresh variable is
        placed above it.  The returned generators form a Groebner basis of
        the intersection for the induced lex order.
        """
        if other.ring != self.ring:
            raise RingMismatchError("ideals from different rings")
        if order is not None and order.kind != "lex":
            raise ValueError("intersection requires a lex ordering for elimination")
        base_prec = (order or self.ring.order).precedence
        tname = self.ring.fresh_name("t")
        ext = PolyRing(
            (tname,) + self.ring.names,
            "lex",
            (tname,) + tuple(self.ring.names[i] for i in base_prec),
        )
        t = ext.var(tname)
        one_minus_t = ext.one - t
        lifted = [one_minus_t * ext.convert(f) for f in self.gens]
        lifted += [t * ext.convert(g) for g in other.gens]
        basis = groebner_basis(lifted, ext.order, max_pairs)
        kept = [
            self.ring.convert(b)
            for b in basis
            if all(exps[0] == 0 for exps, _ in b.terms)
        ]
        return Ideal(self.ring, tuple(kept))

    def colon(self, f: Polynomial, max_pairs: int | None = None) -> "Ideal":
        """The colon ideal (I : f) for a single nonzero divisor f."""
        if f.ring != self.ring:
            raise RingMismatchError("divisor from a different ring")
        if not f:
            raise ValueError("colon by the zero polynomial")
        if f.is_constant():
            return Ideal(self.ring, self.gens)
        meet = self.intersection(Ideal(self.ring, (f,)), max_pairs=max_pairs)
        quotients = []
        for b in meet.gens:
            try:
                quotients.append(exact_divide(b, f))
            except ValueError as exc:
                raise ColonDivisionError(
                    f"intersection basis element {b} not divisible by {f}"
                ) from exc
        return Ideal(self.ring, tuple(quotients))

    def contains(self, other: "Ideal") -> bool:
        """True when every generator of ``other`` reduces to zero mod self."""
        if other.ring != self.ring:
            raise RingMismatchError("ideals from different rings")
        basis = self.groebner()
        return all(not normal_form(g, basis) for g in other.gens)

    def dimension(self, max_pairs: int | None = None) -> int:
        """Krull dimension of the quotient, from the leading-term ideal.

        This is the size of the largest variable subset S such that no
        leading monomial of the basis involves only variables from S.
        """
        basis = self.groebner(max_pairs=max_pairs)
        if is_unit_basis(basis):
            raise WholeRingError("dimension undefined for the unit ideal")
        n = self.ring.nvars
        supports = set()
        for g in basis:
            lm = g.leading_monomial()
            supports.add(frozenset(i for i, e in enumerate(lm) if e))
        # drop supports containing another support: they impose nothing new
        minimal = [
            s for s in supports if not any(t < s for t in supports)
        ]
        return n - _min_hitting_set(sorted(minimal, key=sorted), n)

    def __repr__(self):
        return f"Ideal({', '.join(str(g) for g in self.gens)})"


def _min_hitting_set(supports: list[frozenset[int]], upper: int) -> int:
    """Smallest variable set meeting every support (branch and bound)."""
    if not supports:
        return 0
    best = [upper]

    def rec(remaining: list[frozenset[int]], chosen: int):
        if not remaining:
            best[0] = min(best[0], chosen)
            return
        if chosen + 1 >= best[0]:
            return
        pivot = min(remaining, key=len)
        for v in sorted(pivot):
            rec([s for s in remaining if v not in s], chosen + 1)

    rec(supports, 0)
    return best[0]


def radical_membership(
    f: Polynomial,
    ideal: Ideal,
    max_pairs: int | None = None,
) -> bool:
    """Decide f in sqrt(I) by testing whether 1 lies in I + (1 - y*f).

    When the ideal already carries a basis for its ring order, plain
    membership is tried first; f in I forces f in the radical, so this
    cannot change the answer.
    """
    if f.ring != ideal.ring:
        raise RingMismatchError("element from a different ring")
    cached = ideal.cached_basis()
    if cached is not None and not normal_form(f, cached):
        return True
    ring = ideal.ring
    yname = ring.fresh_name("y")
    # graded order: the unit, if present, is found on shallow degrees
    ext = PolyRing(
        (yname,) + ring.names,
        "grlex",
        (yname,) + tuple(ring.names[i] for i in ring.order.precedence),
    )
    gens = [ext.convert(g) for g in ideal.gens]
    gens.append(ext.one - ext.var(yname) * ext.convert(f))
    return is_unit_basis(groebner_basis(gens, ext.order, max_pairs))
