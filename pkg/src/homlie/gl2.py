"""Defining data for the multiplicative Hom-Lie variety of gl(2).

The variety sits in the 16 coordinates x11..x44 of a linear map D, with
x_ij the coefficient of e_j in D(e_i).  This module carries its 23 defining
generators, the auxiliary combinations used to split off components, the
three prime component ideals p1, p2, p3, and the product-witness ideal p.

The quadratic component is governed by five essential coordinates
(beta = x41 - x44 together with x23, x32, x42, x43); the slice helpers
rewrite the relevant generators in that smaller ring.
"""

from __future__ import annotations

from .ideals import Ideal
from .poly import Polynomial, PolyRing

__all__ = [
    "auxiliary",
    "component_ideal",
    "defining_ideal",
    "generators",
    "ring",
    "slice_generators",
    "slice_ring",
]

_GENERATOR_TEXT = (
    "x11 - x44",
    "x23*x32 + x41*x44 - x42*x43 - 1/2*x41^2 - 1/2*x41 - 1/2*x44^2 + 1/2*x44",
    "x12 + x42",
    "x23*x41 - x23*x44 - x23 + 2*x43^2",
    "x13 + x43",
    "x23*x42 - 1/2*x41*x43 + 1/2*x43*x44 - 1/2*x43",
    "x14 - x41",
    "x32*x41 - x32*x44 - x32 + 2*x42^2",
    "x21 + x43",
    "x32*x43 - 1/2*x41*x42 + 1/2*x42*x44 - 1/2*x42",
    "x22 - x33",
    "x33^2 + x41*x44 - x42*x43 - 1/2*x41^2 + 1/2*x41 - 1/2*x44^2 - 1/2*x44",
    "x23*x33 + x43^2",
    "x33*x41 - x33*x44 + x33 + 2*x42*x43",
    "x24 - x43",
    "x33*x42 - 1/2*x41*x42 + 1/2*x42*x44 + 1/2*x42",
    "x31 + x42",
    "x33*x43 - 1/2*x41*x43 + 1/2*x43*x44 + 1/2*x43",
    "x32*x33 + x42^2",
    "x41^2*x42 - 2*x41*x42*x44 + 4*x42^2*x43 + x42*x44^2 - x42",
    "x34 - x42",
    "x41^2*x43 - 2*x41*x43*x44 + 4*x42*x43^2 + x43*x44^2 - x43",
    "x41^3 - 3*x41^2*x44 + 4*x41*x42*x43 + 3*x41*x44^2 - x41 - 4*x42*x43*x44 - x44^3 + x44",
)

_AUX_TEXT = {
    "alpha": "x14 - x44",
    "beta": "x41 - x44",
    "h": "x41^2 - 2*x41*x44 + x44^2 + x41 - x44",
    "g1": "x22 - 1/2*x41 + 1/2*x44 + 1/2",
    "g2": "x23*x32 + x42*x43 - 1/2*x41 + 1/2*x44 - 1/2",
    "g3": "x41^2 - 2*x41*x44 + x44^2 + 4*x42*x43 - 1",
}


def ring(kind: str = "grlex") -> PolyRing:
    """The coordinate ring Q[x11, ..., x44] of 4x4 transforms."""
    names = [f"x{i}{j}" for i in range(1, 5) for j in range(1, 5)]
    return PolyRing(names, kind)


def generators(R: PolyRing | None = None) -> tuple[Polynomial, ...]:
    """The 23 defining generators f1..f23, in order."""
    R = R or ring()
    return tuple(R.parse(text) for text in _GENERATOR_TEXT)


def defining_ideal(R: PolyRing | None = None) -> Ideal:
    R = R or ring()
    return Ideal(R, generators(R))


def auxiliary(R: PolyRing | None = None) -> dict[str, Polynomial]:
    """The auxiliary combinations alpha, beta, h, g1, g2, g3."""
    R = R or ring()
    return {name: R.parse(text) for name, text in _AUX_TEXT.items()}


def component_ideal(name: str, R: PolyRing | None = None) -> Ideal:
    """One of the component ideals ``p1``, ``p2``, ``p3`` or the witness ``p``."""
    R = R or ring()
    f = generators(R)
    aux = auxiliary(R)
    v = R.var
    if name == "p1":
        gens = (
            f[0], aux["alpha"], aux["beta"],
            v("x12"), v("x13"), v("x21"), v("x22"), v("x23"), v("x24"),
            v("x31"), v("x32"), v("x33"), v("x34"), v("x42"), v("x43"),
        )
    elif name == "p2":
        gens = (
            f[0], aux["alpha"] + 1, aux["beta"] + 1,
            v("x12"), v("x13"), v("x21"), v("x22") - 1, v("x23"), v("x24"),
            v("x31"), v("x32"), v("x33") - 1, v("x34"), v("x42"), v("x43"),
        )
    elif name == "p3":
        # f11 links x22 and x33; without it the component would leave x33
        # free, contradicting its dimension and the containment of the
        # defining ideal
        gens = (
            f[0], f[2], f[3], f[4], f[5], f[6], f[7], f[8], f[9],
            f[10], f[14], f[16], f[20],
            aux["g1"], aux["g2"], aux["g3"],
        )
    elif name == "p":
        gens = (
            f[0], f[6], aux["h"],
            v("x12"), v("x13"), v("x21"), v("x22") + aux["beta"], v("x23"), v("x24"),
            v("x31"), v("x32"), v("x33") + aux["beta"], v("x34"), v("x42"), v("x43"),
        )
    else:
        raise ValueError(f"unknown component ideal {name!r}")
    return Ideal(R, gens)


def slice_ring() -> PolyRing:
    """Q[beta, x23, x32, x42, x43] with the lex order beta > x23 > x32 > x42 > x43."""
    return PolyRing(["beta", "x23", "x32", "x42", "x43"], "lex")


def slice_generators(B: PolyRing | None = None) -> tuple[Polynomial, ...]:
    """The generators (g2, g3, f4, f6, f8, f10) rewritten in the slice ring.

    Rewriting substitutes x41 = beta + x44 into the 16-variable forms; the
    results no longer involve x44 and transfer to the five-variable ring.
    """
    B = B or slice_ring()
    R16 = ring()
    ext = R16.extend(["beta"])
    beta = ext.var("beta")
    x44 = ext.var("x44")
    aux = auxiliary(R16)
    f = generators(R16)
    picked = (aux["g2"], aux["g3"], f[3], f[5], f[7], f[9])
    out = []
    for p in picked:
        q = ext.convert(p).substitute({"x41": beta + x44})
        if "x44" in q.variables():
            raise AssertionError(f"x44 survives the slice rewrite of {p}")
        out.append(B.convert(q))
    return tuple(out)
