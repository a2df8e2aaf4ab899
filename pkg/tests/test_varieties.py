from fractions import Fraction

import pytest

from homlie import families, gl2
from homlie.ideals import WholeRingError, radical_membership
from homlie.liealg import LieAlgebra, gl, gl_slz, heisenberg, upper_triangular
from homlie.linalg import Matrix
from homlie.varieties import (
    ParamMatrix,
    UncoveredDenominatorError,
    classify_matrix,
    component_dimension,
    first_failing_equation,
    generate_homlie_ideal,
    hom_jacobi_solution_space,
    load_param_matrix,
    verify_family,
)


def corner_matrix(a):
    return Matrix([[a, 0, 0, a], [0, 0, 0, 0], [0, 0, 0, 0], [a, 0, 0, a]])


class TestGeneration:
    def test_gl2_degrees(self):
        system = generate_homlie_ideal(gl(2))
        assert all(p.total_degree() == 1 for p in system.jacobi)
        assert all(p.total_degree() <= 2 for p in system.mult)
        assert system.jacobi and system.mult

    def test_abelian_gives_nothing(self):
        abelian = LieAlgebra(3, {})
        system = generate_homlie_ideal(abelian)
        assert system.generators == ()

    def test_multiplicative_flag(self):
        system = generate_homlie_ideal(gl(2), multiplicative=False)
        assert system.mult == ()

    def test_deterministic(self):
        a = generate_homlie_ideal(upper_triangular(2))
        b = generate_homlie_ideal(upper_triangular(2))
        assert a.generators == b.generators

    def test_h3_variety_dimension(self):
        system = generate_homlie_ideal(heisenberg(1))
        assert system.ideal().dimension() == 6

    def test_degree_invariants_hold_on_larger_builtins(self):
        for algebra in (gl(3), heisenberg(3), upper_triangular(4)):
            system = generate_homlie_ideal(algebra)
            assert all(p.total_degree() == 1 for p in system.jacobi)
            assert all(p.total_degree() <= 2 for p in system.mult)


class TestVarietyEquality:
    """The generated gl(2) ideal and the 23 published generators cut out
    the same variety (two-way radical membership)."""

    def test_two_way_radical_membership(self):
        system = generate_homlie_ideal(gl(2))
        raw = system.ideal()
        published = gl2.defining_ideal(system.ring)
        raw.groebner()
        published.groebner()
        assert all(radical_membership(f, raw) for f in published.gens)
        assert all(radical_membership(f, published) for f in raw.gens)


class TestClassification:
    def test_identity_is_everything(self):
        for algebra in (gl(2), heisenberg(2), upper_triangular(3)):
            record = classify_matrix(algebra, Matrix.identity(algebra.dim))
            assert record.hom_lie and record.multiplicative
            assert record.regular and record.involutive

    def test_zero_map_is_multiplicative(self):
        for algebra in (gl(2), heisenberg(1), upper_triangular(2)):
            record = classify_matrix(algebra, Matrix.zero(algebra.dim))
            assert record.multiplicative and not record.regular

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            classify_matrix(gl(2), Matrix.identity(3))

    def test_heisenberg_chain_witnesses(self):
        h5 = heisenberg(2)
        fam = families.family("heis", h5)
        zeros = {"a1": 0, "b1": 0, "a2": 0, "b2": 0}
        involutive = fam.specialize({"a": -1, "b": 0, "c": 0, "d": -1, **zeros})
        record = classify_matrix(h5, involutive)
        assert record.involutive and not involutive.is_identity()
        assert involutive * involutive == Matrix.identity(5)

        regular = fam.specialize({"a": 1, "b": 1, "c": -1, "d": 1, **zeros})
        record = classify_matrix(h5, regular)
        assert record.regular and not record.involutive
        assert record.determinant == 8

        nonregular = fam.specialize({"a": 1, "b": 1, "c": 1, "d": 1, **zeros})
        record = classify_matrix(h5, nonregular)
        assert record.multiplicative and not record.regular

    def test_first_failing_equation(self):
        h3 = heisenberg(1)
        bad = Matrix([[0, 0, 0], [1, 0, 0], [0, 0, 0]])  # sends z to x1
        failing = first_failing_equation(h3, bad)
        assert failing is not None and failing[0] == "multiplicative"
        assert first_failing_equation(h3, Matrix.identity(3)) is None


def test_hom_jacobi_space_of_heisenberg_is_everything():
    # brackets land in the center, so the linear conditions are vacuous
    for n in (1, 2):
        h = heisenberg(n)
        basis = hom_jacobi_solution_space(h)
        assert len(basis) == h.dim**2


@pytest.mark.parametrize("n", [1, 2])
def test_non_multiplicative_hom_lie_witness_exists(n):
    h = heisenberg(n)
    for candidate in hom_jacobi_solution_space(h):
        record = classify_matrix(h, candidate)
        assert record.hom_lie
        if not record.multiplicative:
            return
    raise AssertionError("no strictness witness among the solution basis")


class TestFamilies:
    @pytest.mark.parametrize(
        "name,algebra",
        [
            ("Ca", gl(2)),
            ("Da", gl(2)),
            ("E", gl(2)),
            ("h3fam", heisenberg(1)),
            ("heis", heisenberg(1)),
            ("heis", heisenberg(2)),
            ("heis", heisenberg(3)),
            ("diag1", gl_slz(3)),
            ("diag0", gl_slz(3)),
            ("u2p1", upper_triangular(2)),
            ("u2p2", upper_triangular(2)),
            ("u2p3", upper_triangular(2)),
            ("P", upper_triangular(3)),
            ("Q", upper_triangular(3)),
            ("T", upper_triangular(3)),
        ],
    )
    def test_published_families_verify(self, name, algebra):
        report = verify_family(algebra, families.family(name, algebra))
        assert report.ok, report.first_failure()

    def test_size_mismatch_rejected(self):
        with pytest.raises(ValueError):
            verify_family(gl(2), families.family("h3fam", heisenberg(1)))

    def test_perturbed_family_fails(self):
        fam = families.family("Ca", gl(2))
        bumped = ParamMatrix(
            fam.ring.names,
            [["a+1", 0, 0, "a"], [0, 0, 0, 0], [0, 0, 0, 0], ["a", 0, 0, "a"]],
            ring=fam.ring,
        )
        report = verify_family(gl(2), bumped)
        assert not report.ok
        kind, _, residue = report.first_failure()
        assert residue

    def test_component_dimensions(self):
        assert component_dimension(families.family("E", gl(2))) == 3
        assert component_dimension(families.family("Ca", gl(2))) == 1
        assert component_dimension(families.family("h3fam", heisenberg(1))) == 6
        for n in (1, 2, 3):
            fam = families.family("heis", heisenberg(n))
            assert component_dimension(fam) == 2 * n + 4
        u2 = upper_triangular(2)
        for name in ("u2p1", "u2p2", "u2p3"):
            assert component_dimension(families.family(name, u2)) == 4

    def test_inconsistent_constraints(self):
        fam = ParamMatrix(["a"], [["a"]], constraints=["a", "a-1"])
        with pytest.raises(WholeRingError):
            component_dimension(fam)

    def test_default_algebra_resolution(self):
        assert families.default_algebra("diag1", "gl3").names[-1] == "z"
        assert families.default_algebra("heis", "h7").dim == 7
        assert families.default_algebra("Ca").dim == 4


class TestParamMatrix:
    def test_denominator_factoring(self):
        fam = families.family("E", gl(2))
        num, powers = fam.entry(1, 2)
        assert powers == (1,)
        assert str(num) == "-2*b^2"

    def test_uncovered_denominator_rejected(self):
        with pytest.raises(UncoveredDenominatorError):
            ParamMatrix(["a"], [["(a)/(a-1)"]])

    def test_constant_denominator_folds_into_numerator(self):
        fam = ParamMatrix(["a"], [["(a)/(2)"]])
        num, powers = fam.entry(0, 0)
        assert num == fam.ring.var("a") * Fraction(1, 2)
        assert powers == ()

    def test_specialize_checks_constraints(self):
        fam = families.family("E", gl(2))
        point = {"a": 1, "b": 1, "c": 0, "xi": 1}
        with pytest.raises(ZeroDivisionError):
            fam.specialize(point)  # xi = 1 is excluded
        with pytest.raises(ValueError):
            fam.specialize({"a": 1, "b": 1, "c": 1, "xi": 2})

    def test_specialize_agrees_with_classification(self):
        g = gl(2)
        fam = families.family("E", g)
        # xi = 3, b = 1 forces c = (1 - xi^2)/4 = -2
        point = {"a": Fraction(5, 7), "b": 1, "c": -2, "xi": 3}
        record = classify_matrix(g, fam.specialize(point))
        assert record.multiplicative

    def test_file_round_trip(self, tmp_path):
        fam = families.family("E", gl(2))
        path = tmp_path / "family.txt"
        path.write_text(families.family_file_text(fam))
        loaded = load_param_matrix(path)
        assert loaded.entries == fam.entries
        assert loaded.constraints == fam.constraints
        report = verify_family(gl(2), loaded)
        assert report.ok


def test_h3_family_convention_is_distinguished():
    """The six-parameter family passes in the column-image convention and
    its transpose fails, so the basis interpretation is pinned down."""
    h3 = heisenberg(1)
    fam = families.family("h3fam", h3)
    assert verify_family(h3, fam).ok
    transposed = ParamMatrix(
        fam.ring.names,
        [
            ["b*f-c*e", 0, 0],
            ["a", "b", "c"],
            ["d", "e", "f"],
        ],
        ring=fam.ring,
    )
    assert not verify_family(h3, transposed).ok


class TestGl2Data:
    def test_published_membership_identities(self):
        R = gl2.ring()
        f = gl2.generators(R)
        aux = gl2.auxiliary(R)
        p1 = gl2.component_ideal("p1", R)
        assert f[22] in p1  # the cubic generator reduces through beta^3 - beta
        ideal = gl2.defining_ideal(R)
        x23, x32 = R.var("x23"), R.var("x32")
        assert aux["g1"] * x23 in ideal  # matches the quadratic f13
        assert aux["g1"] * x32 in ideal  # matches the quadratic f19
        assert aux["h"] * aux["g1"] in ideal

    def test_containment_suite(self):
        R = gl2.ring()
        published = gl2.defining_ideal(R)
        for name in ("p1", "p2", "p3"):
            assert gl2.component_ideal(name, R).contains(published)
        p1 = gl2.component_ideal("p1", R)
        p2 = gl2.component_ideal("p2", R)
        p3 = gl2.component_ideal("p3", R)
        p = gl2.component_ideal("p", R)
        assert p.contains(p1.product(p2))
        assert published.contains(p.product(p3))

    def test_component_dimensions(self):
        R = gl2.ring()
        dims = [gl2.component_ideal(name, R).dimension() for name in ("p1", "p2", "p3")]
        assert dims == [1, 1, 3]

    def test_component_varieties_are_family_images(self):
        R = gl2.ring()
        p1 = gl2.component_ideal("p1", R)
        fam = families.family("Ca", gl(2))
        concrete = fam.specialize({"a": Fraction(7, 3)})
        point = {
            f"x{i}{j}": concrete[j - 1][i - 1]
            for i in range(1, 5)
            for j in range(1, 5)
        }
        for g in p1.gens:
            assert g.evaluate(point) == 0
