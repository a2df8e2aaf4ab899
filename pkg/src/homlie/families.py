"""Built-in parametric families of multiplicative Hom-Lie structures.

Each family is a :class:`~homlie.varieties.ParamMatrix` tied to a specific
algebra and basis convention:

* ``Ca``, ``Da``, ``E`` live on gl(2) in the matrix-unit basis;
* ``diag1``, ``diag0`` live on gl(n), n >= 3, in the basis that lists
  sl(n) first and the central element last;
* ``h3fam`` and ``heis`` live on Heisenberg algebras in the
  (z, x1, y1, ...) basis;
* ``u2p1``..``u2p3`` and ``P``, ``Q``, ``T`` live on upper triangular
  algebras in the lexicographic E_ij basis.

All matrices are written in the column-image convention: column i is the
image of basis vector e_i.
"""

from __future__ import annotations

import math

from .liealg import LieAlgebra, gl, gl_slz, heisenberg, upper_triangular
from .varieties import ParamMatrix

__all__ = ["FAMILY_NAMES", "default_algebra", "family", "family_file_text"]

FAMILY_NAMES = (
    "Ca",
    "Da",
    "E",
    "heis",
    "h3fam",
    "diag1",
    "diag0",
    "u2p1",
    "u2p2",
    "u2p3",
    "P",
    "Q",
    "T",
)


def _gl2_Ca() -> ParamMatrix:
    return ParamMatrix(
        ["a"],
        [
            ["a", 0, 0, "a"],
            [0, 0, 0, 0],
            [0, 0, 0, 0],
            ["a", 0, 0, "a"],
        ],
    )


def _gl2_Da() -> ParamMatrix:
    return ParamMatrix(
        ["a"],
        [
            ["a", 0, 0, "a-1"],
            [0, 1, 0, 0],
            [0, 0, 1, 0],
            ["a-1", 0, 0, "a"],
        ],
    )


def _gl2_E() -> ParamMatrix:
    # the (2,3) and (3,2) fractions must pair -2b^2 with row 2 and -2c^2
    # with row 3: the component equations force x23 = -2*x43^2/(xi-1) with
    # x43 = c, and x32 = -2*x42^2/(xi-1) with x42 = b
    return ParamMatrix(
        ["a", "b", "c", "xi"],
        [
            ["a-xi", "-c", "-b", "a"],
            ["-b", "1/2*xi-1/2", "(-2*b^2)/(xi-1)", "b"],
            ["-c", "(-2*c^2)/(xi-1)", "1/2*xi-1/2", "c"],
            ["a", "c", "b", "a-xi"],
        ],
        constraints=["xi^2+4*b*c-1"],
        denominators=["xi-1"],
    )


def _heisenberg_family(n: int) -> ParamMatrix:
    """D(a, b, c, d; alpha) on the (2n+1)-dimensional Heisenberg algebra."""
    params = ["a", "b", "c", "d"]
    for i in range(1, n + 1):
        params += [f"a{i}", f"b{i}"]
    size = 2 * n + 1
    rows = [["0"] * size for _ in range(size)]
    rows[0][0] = "a*d-b*c"
    for i in range(1, n + 1):
        rows[0][2 * i - 1] = f"a{i}"
        rows[0][2 * i] = f"b{i}"
        rows[2 * i - 1][2 * i - 1] = "a"
        rows[2 * i - 1][2 * i] = "b"
        rows[2 * i][2 * i - 1] = "c"
        rows[2 * i][2 * i] = "d"
    return ParamMatrix(params, rows)


def _h3_six_parameter() -> ParamMatrix:
    return ParamMatrix(
        ["a", "b", "c", "d", "e", "f"],
        [
            ["b*f-c*e", "a", "d"],
            [0, "b", "e"],
            [0, "c", "f"],
        ],
    )


def _gl_diagonal(n: int, top: int) -> ParamMatrix:
    size = n * n
    rows = [["0"] * size for _ in range(size)]
    for i in range(size - 1):
        rows[i][i] = str(top)
    rows[size - 1][size - 1] = "a"
    return ParamMatrix(["a"], rows)


def _u2_component(which: int) -> ParamMatrix:
    rows = {
        1: [
            ["a", 0, "c"],
            ["b", 0, "d"],
            ["a", 0, "c"],
        ],
        2: [
            ["a", 0, "d"],
            ["b", "c", "-b"],
            ["a-1", 0, "d+1"],
        ],
        3: [
            ["a", 0, "d"],
            ["b", 0, "-b"],
            ["c", 0, "a-c+d"],
        ],
    }[which]
    return ParamMatrix(["a", "b", "c", "d"], rows)


def _u3_P() -> ParamMatrix:
    return ParamMatrix(
        ["a", "b", "c", "d", "e", "f", "g"],
        [
            ["a", 0, 0, "d", 0, "f"],
            [0, 0, 0, 0, 0, 0],
            ["b", 0, 0, "e", 0, "g"],
            ["a", 0, 0, "d", 0, "f"],
            ["c", 0, 0, "-c", 0, 0],
            ["a", 0, 0, "d", 0, "f"],
        ],
    )


def _u3_Q() -> ParamMatrix:
    return ParamMatrix(
        ["a", "b", "c", "d", "e", "f", "g"],
        [
            ["a", 0, 0, "c", 0, "f"],
            [0, 0, 0, "d", 0, "-d"],
            ["b", 0, 0, "e", 0, "g"],
            ["a", 0, 0, "c", 0, "f"],
            [0, 0, 0, 0, 0, 0],
            ["a", 0, 0, "c", 0, "f"],
        ],
    )


def _u3_T() -> ParamMatrix:
    return ParamMatrix(
        ["a", "b", "c", "d"],
        [
            ["a", 0, 0, "c", 0, "d"],
            [0, 1, 0, 0, 0, 0],
            ["b", 0, 1, 0, 0, "-b"],
            ["a-1", 0, 0, "c+1", 0, "d"],
            [0, 0, 0, 0, 1, 0],
            ["a-1", 0, 0, "c", 0, "d+1"],
        ],
    )


def family(name: str, algebra: LieAlgebra) -> ParamMatrix:
    """The named built-in family sized for ``algebra``.

    Raises ``ValueError`` when the name is unknown or the algebra dimension
    does not fit the family.
    """
    dim = algebra.dim
    if name == "Ca":
        fam = _gl2_Ca()
    elif name == "Da":
        fam = _gl2_Da()
    elif name == "E":
        fam = _gl2_E()
    elif name == "heis":
        if dim % 2 == 0 or dim < 3:
            raise ValueError("heis requires a (2n+1)-dimensional Heisenberg algebra")
        fam = _heisenberg_family((dim - 1) // 2)
    elif name == "h3fam":
        fam = _h3_six_parameter()
    elif name in ("diag1", "diag0"):
        n = math.isqrt(dim)
        if n * n != dim or n < 3:
            raise ValueError(f"{name} requires gl(n) with n >= 3")
        fam = _gl_diagonal(n, 1 if name == "diag1" else 0)
    elif name in ("u2p1", "u2p2", "u2p3"):
        fam = _u2_component(int(name[-1]))
    elif name == "P":
        fam = _u3_P()
    elif name == "Q":
        fam = _u3_Q()
    elif name == "T":
        fam = _u3_T()
    else:
        raise ValueError(f"unknown family {name!r}")
    if fam.size != dim:
        raise ValueError(
            f"family {name} has size {fam.size}, algebra has dimension {dim}"
        )
    return fam


def default_algebra(name: str, algebra_token: str | None = None) -> LieAlgebra:
    """The algebra a built-in family lives on.

    ``algebra_token`` is a built-in algebra name such as ``gl3`` or ``h5``;
    the diagonal families resolve gl(n) tokens to the center-adapted basis
    they are stated in.
    """
    if name in ("Ca", "Da", "E"):
        return gl(2)
    if name == "h3fam":
        return heisenberg(1)
    if name == "heis":
        token = algebra_token or "h3"
        if not token.startswith("h"):
            raise ValueError("heis lives on Heisenberg algebras")
        dim = int(token[1:])
        return heisenberg((dim - 1) // 2)
    if name in ("diag1", "diag0"):
        token = algebra_token or "gl3"
        if not token.startswith("gl"):
            raise ValueError(f"{name} lives on gl(n)")
        return gl_slz(int(token[2:]))
    if name in ("u2p1", "u2p2", "u2p3"):
        return upper_triangular(2)
    if name in ("P", "Q", "T"):
        return upper_triangular(3)
    raise ValueError(f"unknown family {name!r}")


def family_file_text(fam: ParamMatrix) -> str:
    """Render a family in the parametric-matrix file format."""
    lines = ["params " + " ".join(fam.ring.names)]
    for c in fam.constraints:
        lines.append(f"constraint {c}")
    for d in fam.denominators:
        lines.append(f"denominator {d}")
    lines.append(f"matrix {fam.size}")
    for r in range(fam.size):
        cells = []
        for c in range(fam.size):
            num, powers = fam.entries[r][c]
            text = str(num)
            if any(powers):
                den = fam.ring.one
                for d, p in zip(fam.denominators, powers):
                    den = den * d**p
                text = f"({text})/({den})"
            cells.append(text.replace(" ", ""))
        lines.append(" ".join(cells))
    return "\n".join(lines) + "\n"
