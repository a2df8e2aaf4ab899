"""Multivariate division and Buchberger's algorithm with reduced output.

Everything is deterministic: division tries divisors in list order, critical
pairs are processed in ascending (lcm degree, lex-on-lcm) order, and the
returned basis is the unique reduced monic Groebner basis sorted with the
largest leading monomial first.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Iterable, Sequence

from .poly import MonomialOrder, Polynomial, PolyRing, RingMismatchError

__all__ = [
    "BudgetExhaustedError",
    "exact_divide",
    "groebner_basis",
    "is_unit_basis",
    "normal_form",
    "reduce_with_quotients",
    "s_polynomial",
]


class BudgetExhaustedError(RuntimeError):
    """The Buchberger pair budget ran out before the basis stabilized."""


def _common_ring(polys: Iterable[Polynomial]) -> PolyRing | None:
    ring = None
    for p in polys:
        if ring is None:
            ring = p.ring
        elif p.ring != ring:
            raise RingMismatchError("polynomials from different rings")
    return ring


def _divides(d: tuple[int, ...], m: tuple[int, ...]) -> bool:
    return all(a <= b for a, b in zip(d, m))


def _sub_scaled(
    work: dict,
    factor: Fraction,
    shift: tuple[int, ...],
    terms,
) -> None:
    # work -= factor * x^shift * terms
    for exps, coeff in terms:
        key = tuple(a + b for a, b in zip(shift, exps))
        val = work.get(key, Fraction(0)) - factor * coeff
        if val:
            work[key] = val
        else:
            work.pop(key, None)


def _prep_divisors(divisors: Sequence[Polynomial], order: MonomialOrder):
    prepped = []
    for g in divisors:
        if not g:
            continue
        lm, lc = g.leading_term(order)
        prepped.append((lm, lc, g.terms))
    return prepped


def normal_form(
    f: Polynomial,
    divisors: Sequence[Polynomial],
    order: MonomialOrder | None = None,
) -> Polynomial:
    """Remainder of ``f`` under multivariate division by ``divisors``.

    No term of the result is divisible by any leading term of the divisors;
    divisors are tried in list order, so the result is deterministic.  Zero
    divisors are skipped; an empty divisor list returns ``f`` unchanged.
    """
    ring = f.ring
    _common_ring([f, *divisors])
    order = order or ring.order
    key = order.key
    prepped = _prep_divisors(divisors, order)
    work = dict(f.terms)
    remainder: dict[tuple[int, ...], Fraction] = {}
    while work:
        m = max(work, key=key)
        c = work[m]
        for lm, lc, terms in prepped:
            if _divides(lm, m):
                shift = tuple(a - b for a, b in zip(m, lm))
                _sub_scaled(work, c / lc, shift, terms)
                break
        else:
            remainder[m] = c
            del work[m]
    return ring.poly(remainder)


def reduce_with_quotients(
    f: Polynomial,
    divisors: Sequence[Polynomial],
    order: MonomialOrder | None = None,
) -> tuple[list[Polynomial], Polynomial]:
    """Division with an explicit certificate: f = sum(q_i * g_i) + r."""
    ring = f.ring
    _common_ring([f, *divisors])
    order = order or ring.order
    key = order.key
    prepped = []
    for idx, g in enumerate(divisors):
        if g:
            lm, lc = g.leading_term(order)
            prepped.append((idx, lm, lc, g.terms))
    quotients: list[dict] = [dict() for _ in divisors]
    work = dict(f.terms)
    remainder: dict[tuple[int, ...], Fraction] = {}
    while work:
        m = max(work, key=key)
        c = work[m]
        for idx, lm, lc, terms in prepped:
            if _divides(lm, m):
                shift = tuple(a - b for a, b in zip(m, lm))
                q = quotients[idx]
                q[shift] = q.get(shift, Fraction(0)) + c / lc
                _sub_scaled(work, c / lc, shift, terms)
                break
        else:
            remainder[m] = c
            del work[m]
    return [ring.poly(q) for q in quotients], ring.poly(remainder)


def exact_divide(f: Polynomial, d: Polynomial) -> Polynomial:
    """Quotient f / d when the division is exact; raises otherwise."""
    if not d:
        raise ZeroDivisionError("division by the zero polynomial")
    (quotient,), rem = reduce_with_quotients(f, [d])
    if rem:
        raise ValueError(f"{f} is not divisible by {d}")
    return quotient


def s_polynomial(
    f: Polynomial,
    g: Polynomial,
    order: MonomialOrder | None = None,
) -> Polynomial:
    """S(f, g) = (lcm/lt(f)) * f - (lcm/lt(g)) * g."""
    if not f or not g:
        raise ValueError("s_polynomial requires nonzero inputs")
    _common_ring([f, g])
    order = order or f.ring.order
    lmf, lcf = f.leading_term(order)
    lmg, lcg = g.leading_term(order)
    lcm = tuple(max(a, b) for a, b in zip(lmf, lmg))
    left = f * (Fraction(1) / lcf) * f.ring.monomial(tuple(a - b for a, b in zip(lcm, lmf)))
    right = g * (Fraction(1) / lcg) * g.ring.monomial(tuple(a - b for a, b in zip(lcm, lmg)))
    return left - right


def is_unit_basis(basis: Sequence[Polynomial]) -> bool:
    return len(basis) == 1 and basis[0].is_constant() and bool(basis[0])


def groebner_basis(
    gens: Sequence[Polynomial],
    order: MonomialOrder | None = None,
    max_pairs: int | None = None,
) -> tuple[Polynomial, ...]:
    """The reduced monic Groebner basis of the ideal generated by ``gens``.

    The empty ideal gives ``()``; a unit ideal gives ``(1,)``.  Exceeding
    ``max_pairs`` S-polynomial reductions raises
    :class:`BudgetExhaustedError` rather than returning a partial answer.
    """
    ring = _common_ring(gens)
    polys = [g for g in gens if g]
    if ring is None or not polys:
        return ()
    order = order or ring.order
    key = order.key

    basis: list[Polynomial] = []
    for p in polys:
        r = normal_form(p, basis, order)
        if r:
            if r.is_constant():
                return (ring.one,)
            basis.append(r.monic(order))

    # critical pairs keyed by (lcm degree, lex on lcm, indices)
    lex_perm = order.precedence
    heap: list = []
    pending: set[tuple[int, int]] = set()

    def push_pair(i: int, j: int):
        lmi = basis[i].leading_monomial(order)
        lmj = basis[j].leading_monomial(order)
        lcm = tuple(max(a, b) for a, b in zip(lmi, lmj))
        heapq.heappush(heap, (sum(lcm), tuple(lcm[v] for v in lex_perm), i, j, lcm))
        pending.add((i, j))

    for j in range(len(basis)):
        for i in range(j):
            push_pair(i, j)

    reductions = 0
    while heap:
        _, _, i, j, lcm = heapq.heappop(heap)
        pending.discard((i, j))
        lmi = basis[i].leading_monomial(order)
        lmj = basis[j].leading_monomial(order)
        if all(min(a, b) == 0 for a, b in zip(lmi, lmj)):
            continue  # coprime leading terms: S-polynomial reduces to zero
        if _chain_criterion(basis, order, i, j, lcm, pending):
            continue
        if max_pairs is not None and reductions >= max_pairs:
            raise BudgetExhaustedError(
                f"Groebner budget of {max_pairs} pair reductions exhausted"
            )
        reductions += 1
        r = normal_form(s_polynomial(basis[i], basis[j], order), basis, order)
        if not r:
            continue
        if r.is_constant():
            return (ring.one,)
        basis.append(r.monic(order))
        new = len(basis) - 1
        for t in range(new):
            push_pair(t, new)

    return _reduce_basis(basis, order)


def _chain_criterion(basis, order, i, j, lcm, pending) -> bool:
    # skip (i, j) when some lt(g_l) divides the pair lcm and both mixed
    # pairs were already handled (Buchberger's second criterion)
    for l in range(len(basis)):
        if l == i or l == j:
            continue
        if not _divides(basis[l].leading_monomial(order), lcm):
            continue
        a = (min(i, l), max(i, l))
        b = (min(j, l), max(j, l))
        if a not in pending and b not in pending:
            return True
    return False


def _reduce_basis(basis: list[Polynomial], order: MonomialOrder) -> tuple[Polynomial, ...]:
    key = order.key
    by_lead = sorted(range(len(basis)), key=lambda i: key(basis[i].leading_monomial(order)))
    kept: list[Polynomial] = []
    for i in by_lead:
        lm = basis[i].leading_monomial(order)
        if not any(_divides(g.leading_monomial(order), lm) for g in kept):
            kept.append(basis[i])
    reduced = []
    for i, g in enumerate(kept):
        others = kept[:i] + kept[i + 1 :]
        r = normal_form(g, others, order)
        if r:
            reduced.append(r.monic(order))
    reduced.sort(key=lambda g: key(g.leading_monomial(order)), reverse=True)
    return tuple(reduced)
