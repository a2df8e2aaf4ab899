"""Command-line front end.

Every subcommand prints either a human-readable text report or, with
``--format structured``, a single JSON document with stable key order so
identical inputs give byte-identical output.  Exit codes: 0 success,
1 counterexample, 2 input error, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import families
from .derivations import derivation_space, hilbert_series
from .groebner import BudgetExhaustedError, groebner_basis
from .ideals import Ideal, WholeRingError, radical_membership
from .liealg import (
    AntisymmetryError,
    JacobiError,
    LieAlgebra,
    LieFileError,
    gl,
    gl_slz,
    heisenberg,
    load_lie_algebra,
    sl,
    upper_triangular,
)
from .linalg import Matrix
from .poly import PolyParseError, PolyRing, RingMismatchError
from .varieties import (
    UncoveredDenominatorError,
    classify_matrix,
    first_failing_equation,
    generate_homlie_ideal,
    load_param_matrix,
    verify_family,
)

__all__ = ["main"]

GROEBNER_GUARD_DIM = 4  # raw-ideal bases only up to 16 coordinate variables

BUILTIN_ALGEBRAS = {
    "gl2": lambda: gl(2),
    "gl3": lambda: gl(3),
    "sl2": lambda: sl(2),
    "sl3": lambda: sl(3),
    "h3": lambda: heisenberg(1),
    "h5": lambda: heisenberg(2),
    "h7": lambda: heisenberg(3),
    "u2": lambda: upper_triangular(2),
    "u3": lambda: upper_triangular(3),
    "u4": lambda: upper_triangular(4),
}


class InputError(ValueError):
    """Bad command-line input; reported with exit code 2."""


class Counterexample(Exception):
    """A check failed; carries the payload describing the failure."""

    def __init__(self, payload: dict):
        super().__init__("counterexample")
        self.payload = payload


def _resolve_algebra(args, family_name: str | None = None) -> LieAlgebra:
    if getattr(args, "file", None):
        return load_lie_algebra(args.file)
    token = getattr(args, "algebra", None)
    if token is None:
        raise InputError("no algebra given: name one or use --file")
    if token not in BUILTIN_ALGEBRAS:
        raise InputError(
            f"unknown algebra {token!r}; choose from {', '.join(sorted(BUILTIN_ALGEBRAS))}"
        )
    if family_name in ("diag1", "diag0") and token.startswith("gl"):
        # the diagonal families are stated in the center-adapted basis
        return gl_slz(int(token[2:]))
    return BUILTIN_ALGEBRAS[token]()


def _build_ring(args) -> PolyRing:
    if not getattr(args, "ring", None):
        raise InputError("--ring is required (comma-separated variable names)")
    names = [nm.strip() for nm in args.ring.split(",") if nm.strip()]
    kind, precedence = _parse_order_spec(getattr(args, "order", None))
    return PolyRing(names, kind or "lex", precedence)


def _parse_order_spec(spec: str | None):
    if not spec:
        return None, None
    kind = None
    body = spec
    if ":" in spec:
        kind, body = spec.split(":", 1)
    elif spec in ("lex", "grlex"):
        return spec, None
    if kind is not None and kind not in ("lex", "grlex"):
        raise InputError(f"unknown ordering kind {kind!r}")
    precedence = [nm.strip() for nm in body.split(",") if nm.strip()] or None
    return kind, precedence


def _parse_polys(ring: PolyRing, texts, path=None):
    out = []
    for text in texts or ():
        out.append(ring.parse(text))
    if path:
        with open(path, encoding="utf-8") as handle:
            for raw in handle:
                line = raw.split("#", 1)[0].strip()
                if line:
                    out.append(ring.parse(line))
    if not out:
        raise InputError("no polynomials given")
    return out


def _load_matrix(args, algebra: LieAlgebra) -> Matrix:
    spec = getattr(args, "matrix", None)
    fam_name = getattr(args, "family", None)
    if spec is None and fam_name is None:
        raise InputError("no matrix given: use --matrix or --family with --at")
    if spec is not None:
        if spec == "identity":
            return Matrix.identity(algebra.dim)
        if spec == "zero":
            return Matrix.zero(algebra.dim)
        rows = []
        with open(spec, encoding="utf-8") as handle:
            for raw in handle:
                line = raw.split("#", 1)[0].strip()
                if line:
                    rows.append([Fraction(v) for v in line.split()])
        return Matrix(rows)
    fam = families.family(fam_name, algebra)
    assigns = {}
    for chunk in (getattr(args, "at", None) or "").split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        name, _, value = chunk.partition("=")
        if not value:
            raise InputError(f"bad assignment {chunk!r}; expected name=rational")
        assigns[name.strip()] = Fraction(value.strip())
    missing = [nm for nm in fam.ring.names if nm not in assigns]
    if missing:
        raise InputError(f"--at misses parameters: {', '.join(missing)}")
    return fam.specialize(assigns)


def _matrix_payload(m: Matrix) -> list[list[str]]:
    return [[str(v) for v in row] for row in m.rows]


# -- subcommand bodies -------------------------------------------------------


def _cmd_generate_ideal(args) -> dict:
    algebra = _resolve_algebra(args)
    system = generate_homlie_ideal(algebra, multiplicative=args.multiplicative)
    payload = {
        "dimension_of_algebra": algebra.dim,
        "jacobi_generators": [str(p) for p in system.jacobi],
        "multiplicative_generators": [str(p) for p in system.mult],
    }
    if args.groebner:
        if algebra.dim > GROEBNER_GUARD_DIM:
            raise InputError(
                f"raw-ideal Groebner bases are guarded to dimension <= {GROEBNER_GUARD_DIM}; "
                f"{algebra.dim}^2 = {algebra.dim ** 2} variables is out of range"
            )
        basis = system.ideal().groebner(max_pairs=args.budget)
        payload["groebner_basis"] = [str(p) for p in basis]
    if args.dimension:
        payload["variety_dimension"] = system.ideal().dimension(max_pairs=args.budget)
    return payload


def _cmd_groebner(args) -> dict:
    ring = _build_ring(args)
    polys = _parse_polys(ring, args.poly, args.polys_file)
    basis = groebner_basis(polys, max_pairs=args.budget)
    return {"basis": [str(p) for p in basis], "size": len(basis)}


def _cmd_intersect(args) -> dict:
    ring = _build_ring(args)
    left = Ideal(ring, _parse_polys(ring, args.poly))
    right = Ideal(ring, _parse_polys(ring, args.other))
    meet = left.intersection(right, max_pairs=args.budget)
    return {"generators": [str(p) for p in meet.gens]}


def _cmd_colon(args) -> dict:
    ring = _build_ring(args)
    ideal = Ideal(ring, _parse_polys(ring, args.poly))
    divisor = ring.parse(args.by)
    quotient = ideal.colon(divisor, max_pairs=args.budget)
    return {"generators": [str(p) for p in quotient.gens]}


def _cmd_contains(args) -> dict:
    ring = _build_ring(args)
    left = Ideal(ring, _parse_polys(ring, args.poly))
    right = Ideal(ring, _parse_polys(ring, args.other))
    basis = left.groebner(max_pairs=args.budget)
    from .groebner import normal_form

    for g in right.gens:
        residue = normal_form(g, basis)
        if residue:
            raise Counterexample(
                {"contains": False, "witness": str(g), "residue": str(residue)}
            )
    return {"contains": True}


def _cmd_radical_member(args) -> dict:
    ring = _build_ring(args)
    ideal = Ideal(ring, _parse_polys(ring, args.poly))
    element = ring.parse(args.element)
    if radical_membership(element, ideal, max_pairs=args.budget):
        return {"member": True, "element": str(element)}
    raise Counterexample({"member": False, "element": str(element)})


def _cmd_dimension(args) -> dict:
    ring = _build_ring(args)
    ideal = Ideal(ring, _parse_polys(ring, args.poly))
    return {"dimension": ideal.dimension(max_pairs=args.budget)}


def _cmd_verify(args) -> dict:
    algebra = _resolve_algebra(args, family_name=args.family)
    if args.family:
        fam = families.family(args.family, algebra)
    elif args.family_file:
        fam = load_param_matrix(args.family_file)
    else:
        raise InputError("no family given: use --family or --family-file")
    if args.perturb:
        # deliberate mutation: add 1 to the top-left numerator
        rows = []
        for r in range(fam.size):
            row = []
            for c in range(fam.size):
                num, powers = fam.entries[r][c]
                if r == 0 and c == 0:
                    num = num + 1
                row.append((num, _den_from_powers(fam, powers)))
            rows.append(row)
        fam = type(fam)(
            fam.ring.names,
            rows,
            fam.constraints,
            fam.denominators,
            ring=fam.ring,
        )
    report = verify_family(algebra, fam, max_pairs=args.budget)
    if report.ok:
        return {"verified": True, "equations_checked": report.equations_checked}
    kind, index, residue = report.first_failure()
    raise Counterexample(
        {
            "verified": False,
            "equations_checked": report.equations_checked,
            "failing_equation": {"kind": kind, "index": index, "residue": str(residue)},
        }
    )


def _den_from_powers(fam, powers):
    den = fam.ring.one
    for d, p in zip(fam.denominators, powers):
        den = den * d**p
    return den


def _cmd_classify(args) -> dict:
    algebra = _resolve_algebra(args, family_name=getattr(args, "family", None))
    matrix = _load_matrix(args, algebra)
    record = classify_matrix(algebra, matrix)
    return {
        "hom_lie": record.hom_lie,
        "multiplicative": record.multiplicative,
        "regular": record.regular,
        "involutive": record.involutive,
        "determinant": str(record.determinant),
        "matrix": _matrix_payload(matrix),
    }


def _cmd_derivations(args) -> dict:
    algebra = _resolve_algebra(args, family_name=getattr(args, "family", None))
    matrix = _load_matrix(args, algebra)
    failing = first_failing_equation(algebra, matrix)
    if failing is not None:
        kind, index, value = failing
        raise InputError(
            f"matrix is not multiplicative Hom-Lie: {kind} equation {index} "
            f"evaluates to {value}"
        )
    space = derivation_space(algebra, matrix, args.k, check=False)
    return {
        "k": args.k,
        "dimension": space.dimension,
        "basis": [_matrix_payload(m) for m in space.basis],
    }


def _cmd_hilbert(args) -> dict:
    algebra = _resolve_algebra(args, family_name=getattr(args, "family", None))
    matrix = _load_matrix(args, algebra)
    failing = first_failing_equation(algebra, matrix)
    if failing is not None:
        kind, index, value = failing
        raise InputError(
            f"matrix is not multiplicative Hom-Lie: {kind} equation {index} "
            f"evaluates to {value}"
        )
    series = hilbert_series(algebra, matrix, args.budget)
    return {
        "series": str(series),
        "case": series.case,
        "verified_prefix": list(series.prefix),
    }


# -- report plumbing ---------------------------------------------------------

_EXIT = {"success": 0, "counterexample": 1, "input-error": 2, "budget-exhausted": 3}


def _emit(args, command: str, inputs: dict, outcome: str, payload: dict, elapsed: float) -> int:
    if args.format == "structured":
        doc = {
            "command": command,
            "inputs": inputs,
            "outcome": outcome,
            "payload": payload,
        }
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        print(f"command: {command}")
        print(f"outcome: {outcome}")
        for key in sorted(payload):
            print(f"{key}: {payload[key]}")
        print(f"elapsed_ms: {elapsed * 1000:.1f}")
    return _EXIT[outcome]


def _inputs_echo(args) -> dict:
    skip = {"format", "func", "command_name"}
    echo = {}
    for key, value in sorted(vars(args).items()):
        if key in skip or value in (None, False):
            continue
        echo[key] = value if not isinstance(value, list) else list(value)
    return echo


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "func"):
        parser.print_help()
        return 2
    started = time.perf_counter()
    inputs = _inputs_echo(args)
    try:
        payload = args.func(args)
        outcome = "success"
    except Counterexample as exc:
        payload = exc.payload
        outcome = "counterexample"
    except BudgetExhaustedError as exc:
        payload = {"error": str(exc)}
        outcome = "budget-exhausted"
    except (
        InputError,
        PolyParseError,
        RingMismatchError,
        LieFileError,
        AntisymmetryError,
        JacobiError,
        UncoveredDenominatorError,
        WholeRingError,
        ValueError,
        ZeroDivisionError,
        OSError,
    ) as exc:
        payload = {"error": str(exc)}
        outcome = "input-error"
    elapsed = time.perf_counter() - started
    return _emit(args, args.command_name, inputs, outcome, payload, elapsed)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="homlie",
        description="Exact computations on multiplicative Hom-Lie structure varieties.",
    )
    sub = parser.add_subparsers()

    def add(name: str, func, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=func, command_name=name)
        p.add_argument("--format", choices=("text", "structured"), default="text")
        p.add_argument("--budget", type=int, default=None, help="work budget")
        return p

    p = add("generate-ideal", _cmd_generate_ideal, "emit the defining equations of HLie(g)")
    p.add_argument("algebra", nargs="?", help="built-in algebra name")
    p.add_argument("--file", help="structure-constant file")
    p.add_argument("--multiplicative", action="store_true")
    p.add_argument("--groebner", action="store_true")
    p.add_argument("--dimension", action="store_true")

    p = add("groebner", _cmd_groebner, "reduced Groebner basis of given polynomials")
    p.add_argument("--ring", required=True, help="comma-separated variables")
    p.add_argument("--order", help="[lex:|grlex:]v1,v2,... precedence")
    p.add_argument("--poly", "-p", action="append", help="generator (repeatable)")
    p.add_argument("--polys-file", help="file with one polynomial per line")

    p = add("intersect", _cmd_intersect, "intersection of two ideals")
    p.add_argument("--ring", required=True)
    p.add_argument("--order", help="lex precedence for the elimination")
    p.add_argument("--poly", "-p", action="append", required=True)
    p.add_argument("--other", "-q", action="append", required=True)

    p = add("colon", _cmd_colon, "colon ideal (I : f) for a principal divisor")
    p.add_argument("--ring", required=True)
    p.add_argument("--order", help=argparse.SUPPRESS)
    p.add_argument("--poly", "-p", action="append", required=True)
    p.add_argument("--by", required=True, help="the divisor polynomial")

    p = add("contains", _cmd_contains, "does the first ideal contain the second")
    p.add_argument("--ring", required=True)
    p.add_argument("--order", help=argparse.SUPPRESS)
    p.add_argument("--poly", "-p", action="append", required=True)
    p.add_argument("--other", "-q", action="append", required=True)

    p = add("radical-member", _cmd_radical_member, "is f in the radical of I")
    p.add_argument("--ring", required=True)
    p.add_argument("--order", help=argparse.SUPPRESS)
    p.add_argument("--poly", "-p", action="append", required=True)
    p.add_argument("--element", required=True)

    p = add("dimension", _cmd_dimension, "Krull dimension of V(I)")
    p.add_argument("--ring", required=True)
    p.add_argument("--order", help=argparse.SUPPRESS)
    p.add_argument("--poly", "-p", action="append", required=True)

    p = add("verify", _cmd_verify, "verify a parametric family symbolically")
    p.add_argument("algebra", nargs="?")
    p.add_argument("--file", help="structure-constant file")
    p.add_argument("--family", choices=families.FAMILY_NAMES)
    p.add_argument("--family-file", help="parametric matrix file")
    p.add_argument("--perturb", action="store_true", help="mutate one entry first")

    p = add("classify", _cmd_classify, "classify a concrete matrix in the chain")
    p.add_argument("algebra", nargs="?")
    p.add_argument("--file", help="structure-constant file")
    p.add_argument("--matrix", help="matrix file, or identity/zero")
    p.add_argument("--family", choices=families.FAMILY_NAMES)
    p.add_argument("--at", help="parameter assignments a=1/2,b=0,...")

    p = add("derivations", _cmd_derivations, "basis of the k-th derivation space")
    p.add_argument("algebra", nargs="?")
    p.add_argument("--file", help="structure-constant file")
    p.add_argument("--matrix", help="matrix file, or identity/zero")
    p.add_argument("--family", choices=families.FAMILY_NAMES)
    p.add_argument("--at", help="parameter assignments")
    p.add_argument("--k", type=int, default=0)

    p = add("hilbert", _cmd_hilbert, "Hilbert series of the derivation algebra")
    p.add_argument("algebra", nargs="?")
    p.add_argument("--file", help="structure-constant file")
    p.add_argument("--matrix", help="matrix file, or identity/zero")
    p.add_argument("--family", choices=families.FAMILY_NAMES)
    p.add_argument("--at", help="parameter assignments")

    return parser


if __name__ == "__main__":
    sys.exit(main())
