"""Invariant checks beyond the worked examples: division certificates,
basis uniqueness, leading-term containment, and cross-path consistency."""

from fractions import Fraction
from random import Random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homlie import families
from homlie.derivations import derivation_space
from homlie.groebner import groebner_basis, reduce_with_quotients
from homlie.ideals import Ideal, radical_membership
from homlie.liealg import gl, heisenberg, upper_triangular
from homlie.linalg import Matrix
from homlie.poly import PolyRing
from homlie.varieties import classify_matrix

from property_suites import random_poly, random_small_ideal

RING3 = PolyRing(["x", "y", "z"], "grlex")


@st.composite
def polys(draw, ring=RING3, max_deg=4, max_terms=6):
    n_terms = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n_terms):
        exps = tuple(
            draw(st.integers(0, max_deg)) for _ in range(ring.nvars)
        )
        if sum(exps) > max_deg:
            continue
        coeff = Fraction(draw(st.integers(-6, 6)), draw(st.integers(1, 4)))
        terms[exps] = terms.get(exps, Fraction(0)) + coeff
    return ring.poly(terms)


@settings(max_examples=200, deadline=None)
@given(polys(), st.lists(polys(), min_size=1, max_size=3))
def test_division_certificate(f, divisors):
    divisors = [d for d in divisors if d]
    quotients, remainder = reduce_with_quotients(f, divisors)
    rebuilt = remainder
    for q, g in zip(quotients, divisors):
        rebuilt = rebuilt + q * g
    assert rebuilt == f
    lead_monomials = [g.leading_monomial() for g in divisors]
    for exps, _ in remainder.terms:
        assert not any(
            all(a <= b for a, b in zip(lm, exps)) for lm in lead_monomials
        )


@settings(max_examples=200, deadline=None)
@given(polys(max_deg=2, max_terms=3), polys(max_deg=2, max_terms=3))
def test_print_parse_round_trip(p, q):
    r = p * q
    assert RING3.parse(str(r)) == r


def test_reduced_basis_invariant_under_generator_permutation():
    rng = Random(0x5EED)
    for _ in range(50):
        ideal = random_small_ideal(rng, RING3, gens=3)
        reference = groebner_basis(ideal.gens)
        shuffled = list(ideal.gens)
        rng.shuffle(shuffled)
        assert groebner_basis(shuffled) == reference


def test_leading_term_containment_on_random_combinations():
    rng = Random(0xFACE)
    for _ in range(50):
        ideal = random_small_ideal(rng, RING3, gens=2)
        basis = groebner_basis(ideal.gens)
        if not basis:
            continue
        # an explicit random element of the ideal
        member = RING3.zero
        for g in ideal.gens:
            member = member + random_poly(rng, RING3, 2, 2) * g
        if not member:
            continue
        lead = member.leading_monomial()
        assert any(
            all(a <= b for a, b in zip(g.leading_monomial(), lead)) for g in basis
        )


def test_radical_contains_ideal_members():
    rng = Random(0xBEAD)
    for _ in range(25):
        ideal = random_small_ideal(rng, RING3, gens=2)
        combination = RING3.zero
        for g in ideal.gens:
            combination = combination + random_poly(rng, RING3, 1, 2) * g
        assert radical_membership(combination, ideal)


def test_dimension_of_random_linear_ideals():
    from homlie.linalg import rank

    rng = Random(0xF00D)
    ring = PolyRing(["a", "b", "c", "d", "e"], "grlex")
    for _ in range(30):
        k = rng.randint(0, 5)
        rows = []
        while len(rows) < k:
            row = [rng.randint(-2, 2) for _ in range(5)]
            if rank(rows + [row]) > len(rows):
                rows.append(row)
        gens = tuple(_ideal_poly_from_row(ring, row) for row in rows)
        assert Ideal(ring, gens).dimension() == 5 - k


def _ideal_poly_from_row(ring, row):
    terms = {}
    for j, c in enumerate(row):
        if c:
            exps = [0] * ring.nvars
            exps[j] = 1
            terms[tuple(exps)] = Fraction(c)
    return ring.poly(terms)


@pytest.mark.parametrize(
    "name,algebra_builder",
    [
        ("Ca", lambda: gl(2)),
        ("Da", lambda: gl(2)),
        ("E", lambda: gl(2)),
        ("h3fam", lambda: heisenberg(1)),
        ("heis", lambda: heisenberg(2)),
        ("u2p1", lambda: upper_triangular(2)),
        ("u2p2", lambda: upper_triangular(2)),
        ("u2p3", lambda: upper_triangular(2)),
        ("P", lambda: upper_triangular(3)),
        ("Q", lambda: upper_triangular(3)),
        ("T", lambda: upper_triangular(3)),
    ],
)
def test_symbolic_and_concrete_paths_agree(name, algebra_builder):
    """A random specialization of a verified family classifies as
    multiplicative Hom-Lie."""
    rng = Random(hash(name) & 0xFFFF)
    algebra = algebra_builder()
    fam = families.family(name, algebra)
    for _ in range(5):
        values = {}
        for param in fam.ring.names:
            values[param] = Fraction(rng.randint(-4, 4), rng.choice([1, 2]))
        if name == "E":
            values["xi"] = Fraction(rng.choice([3, 5, -3]))
            values["b"] = Fraction(rng.choice([1, 2, -1]))
            values["c"] = (1 - values["xi"] ** 2) / (4 * values["b"])
        record = classify_matrix(algebra, fam.specialize(values))
        assert record.multiplicative


def test_diag_families_specialize_and_classify():
    from homlie.liealg import gl_slz

    algebra = gl_slz(3)
    for name in ("diag1", "diag0"):
        fam = families.family(name, algebra)
        record = classify_matrix(algebra, fam.specialize({"a": Fraction(5, 3)}))
        assert record.multiplicative


def test_invertible_transform_has_constant_derivation_dimensions():
    g = gl(2)
    invertible = families.family("Da", g).specialize({"a": 2})
    assert invertible.det() != 0
    dims = [derivation_space(g, invertible, k).dimension for k in range(6)]
    assert len(set(dims)) == 1


def test_identity_and_zero_classify_on_every_builtin():
    from homlie.liealg import gl_slz, sl

    builtins = [
        gl(2), gl(3), sl(2), sl(3), gl_slz(3),
        heisenberg(1), heisenberg(2), heisenberg(3),
        upper_triangular(2), upper_triangular(3), upper_triangular(4),
    ]
    for algebra in builtins:
        assert classify_matrix(algebra, Matrix.identity(algebra.dim)).involutive
        zero_record = classify_matrix(algebra, Matrix.zero(algebra.dim))
        assert zero_record.multiplicative and zero_record.hom_lie
