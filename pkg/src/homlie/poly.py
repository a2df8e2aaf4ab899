"""Exact multivariate polynomial arithmetic over the rationals.

A :class:`PolyRing` fixes a tuple of named variables and an active monomial
ordering (lexicographic or graded-lexicographic over a variable precedence).
Polynomials are immutable; their terms are kept sorted descending by the
ring's ordering, so the leading term is always the first entry.

Polynomials print and parse in a plain text grammar: terms joined by ``+``
and ``-``, each term ``[coeff][*var[^exp]]...`` with integer or ``p/q``
rational coefficients, e.g. ``x23*x41 - x23*x44 - x23 + 2*x43^2``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Mapping, Sequence

__all__ = [
    "MonomialOrder",
    "PolyParseError",
    "PolyRing",
    "Polynomial",
    "RingMismatchError",
]

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9]*\Z")

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z][A-Za-z0-9]*)|(?P<op>[-+*^]))"
)


class RingMismatchError(ValueError):
    """Operands belong to different polynomial rings."""


class PolyParseError(ValueError):
    """Input text does not conform to the polynomial grammar."""


class MonomialOrder:
    """A total order on exponent vectors, either ``lex`` or ``grlex``.

    ``precedence`` lists variable indices from highest to lowest.  The order
    is realized as a sort key so ``max(monomials, key=order.key)`` picks the
    leading monomial; the constant monomial is minimal in both kinds.
    """

    __slots__ = ("kind", "precedence")

    def __init__(self, kind: str, precedence: Sequence[int]):
        if kind not in ("lex", "grlex"):
            raise ValueError(f"unknown ordering kind {kind!r}; expected 'lex' or 'grlex'")
        perm = tuple(precedence)
        if sorted(perm) != list(range(len(perm))):
            raise ValueError("precedence must be a permutation of the variable indices")
        self.kind = kind
        self.precedence = perm

    def key(self, exps: tuple[int, ...]):
        permuted = tuple(exps[i] for i in self.precedence)
        if self.kind == "lex":
            return permuted
        return (sum(exps), permuted)

    def greater(self, a: tuple[int, ...], b: tuple[int, ...]) -> bool:
        return self.key(a) > self.key(b)

    def __eq__(self, other):
        return (
            isinstance(other, MonomialOrder)
            and self.kind == other.kind
            and self.precedence == other.precedence
        )

    def __hash__(self):
        return hash((self.kind, self.precedence))

    def __repr__(self):
        return f"MonomialOrder({self.kind!r}, {self.precedence!r})"


class PolyRing:
    """Polynomial ring over Q in named variables with an active ordering.

    Variables compare by their position in the ring's precedence, never by
    string.  Two rings are interchangeable when they agree on variable names
    and ordering.
    """

    __slots__ = ("names", "order", "_pos", "zero", "one")

    def __init__(
        self,
        names: Sequence[str],
        kind: str = "lex",
        precedence: Sequence[str] | None = None,
    ):
        names = tuple(names)
        if not names:
            raise ValueError("a ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        for nm in names:
            if not _NAME_RE.match(nm):
                raise ValueError(f"invalid variable name {nm!r}")
        self.names = names
        self._pos = {nm: i for i, nm in enumerate(names)}
        self.order = MonomialOrder(kind, self._resolve_precedence(precedence))
        self.zero = Polynomial(self, ())
        self.one = Polynomial(self, (((0,) * len(names), Fraction(1)),))

    def _resolve_precedence(self, precedence: Sequence[str] | None) -> tuple[int, ...]:
        if precedence is None:
            return tuple(range(len(self.names)))
        listed = []
        for nm in precedence:
            if nm not in self._pos:
                raise ValueError(f"unknown variable {nm!r} in precedence")
            if self._pos[nm] in listed:
                raise ValueError(f"variable {nm!r} listed twice in precedence")
            listed.append(self._pos[nm])
        # variables not listed keep declaration order below the listed ones
        rest = [i for i in range(len(self.names)) if i not in listed]
        return tuple(listed + rest)

    @property
    def nvars(self) -> int:
        return len(self.names)

    def var(self, name: str) -> Polynomial:
        if name not in self._pos:
            raise ValueError(f"no variable {name!r} in this ring")
        exps = [0] * self.nvars
        exps[self._pos[name]] = 1
        return Polynomial(self, ((tuple(exps), Fraction(1)),))

    def gens(self) -> tuple[Polynomial, ...]:
        return tuple(self.var(nm) for nm in self.names)

    def const(self, value) -> Polynomial:
        c = Fraction(value)
        if c == 0:
            return self.zero
        return Polynomial(self, (((0,) * self.nvars, c),))

    def poly(self, terms: Mapping[tuple[int, ...], Fraction | int]) -> Polynomial:
        """Build a polynomial from an exponent-vector -> coefficient mapping."""
        key = self.order.key
        cleaned = []
        for exps, coeff in terms.items():
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            if len(exps) != self.nvars or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps!r}")
            cleaned.append((tuple(exps), coeff))
        cleaned.sort(key=lambda tc: key(tc[0]), reverse=True)
        return Polynomial(self, tuple(cleaned))

    def monomial(self, exps: Sequence[int], coeff=1) -> Polynomial:
        return self.poly({tuple(exps): Fraction(coeff)})

    def convert(self, p: Polynomial) -> Polynomial:
        """Re-home ``p`` into this ring, matching variables by name."""
        if p.ring == self:
            return Polynomial(self, p.terms)
        out: dict[tuple[int, ...], Fraction] = {}
        for exps, coeff in p.terms:
            new = [0] * self.nvars
            for i, e in enumerate(exps):
                if e == 0:
                    continue
                nm = p.ring.names[i]
                if nm not in self._pos:
                    raise ValueError(f"variable {nm!r} does not exist in the target ring")
                new[self._pos[nm]] = e
            out[tuple(new)] = out.get(tuple(new), Fraction(0)) + coeff
        return self.poly(out)

    def with_order(self, kind: str | None = None, precedence: Sequence[str] | None = None) -> "PolyRing":
        return PolyRing(
            self.names,
            kind or self.order.kind,
            precedence
            if precedence is not None
            else tuple(self.names[i] for i in self.order.precedence),
        )

    def extend(self, new_names: Sequence[str], kind: str | None = None) -> "PolyRing":
        """A ring with ``new_names`` prepended and given highest precedence."""
        prec = tuple(new_names) + tuple(self.names[i] for i in self.order.precedence)
        return PolyRing(tuple(new_names) + self.names, kind or self.order.kind, prec)

    def fresh_name(self, stem: str) -> str:
        if stem not in self._pos:
            return stem
        k = 1
        while f"{stem}{k}" in self._pos:
            k += 1
        return f"{stem}{k}"

    def parse(self, text: str) -> Polynomial:
        """Parse the polynomial text grammar; raises :class:`PolyParseError`."""
        tokens = _tokenize(text)
        return _Parser(self, tokens, text).parse()

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.names == other.names
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.names, self.order))

    def __repr__(self):
        return f"PolyRing({list(self.names)!r}, {self.order.kind!r})"


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            rest = text[pos:].lstrip()
            if not rest:
                break
            raise PolyParseError(f"unexpected character {rest[0]!r} at offset {pos}")
        for kind in ("num", "name", "op"):
            val = m.group(kind)
            if val is not None:
                tokens.append((kind, val, m.start(kind)))
                break
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, ring: PolyRing, tokens, text: str):
        self.ring = ring
        self.tokens = tokens
        self.text = text
        self.i = 0

    def _peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def _next(self):
        tok = self._peek()
        if tok is None:
            raise PolyParseError(f"unexpected end of input in {self.text!r}")
        self.i += 1
        return tok

    def parse(self) -> Polynomial:
        if not self.tokens:
            raise PolyParseError("empty polynomial text")
        acc: dict[tuple[int, ...], Fraction] = {}
        sign = Fraction(1)
        tok = self._peek()
        if tok and tok[0] == "op" and tok[1] in "+-":
            self._next()
            if tok[1] == "-":
                sign = Fraction(-1)
        while True:
            exps, coeff = self._term()
            acc[exps] = acc.get(exps, Fraction(0)) + sign * coeff
            tok = self._peek()
            if tok is None:
                break
            if tok[0] != "op" or tok[1] not in "+-":
                raise PolyParseError(
                    f"expected '+' or '-' at offset {tok[2]} in {self.text!r}"
                )
            self._next()
            sign = Fraction(1) if tok[1] == "+" else Fraction(-1)
        return self.ring.poly(acc)

    def _term(self) -> tuple[tuple[int, ...], Fraction]:
        exps = [0] * self.ring.nvars
        coeff = Fraction(1)
        while True:
            kind, val, off = self._next()
            if kind == "num":
                coeff *= Fraction(val)
            elif kind == "name":
                if val not in self.ring._pos:
                    raise PolyParseError(f"unknown variable {val!r} at offset {off}")
                e = 1
                tok = self._peek()
                if tok and tok[0] == "op" and tok[1] == "^":
                    self._next()
                    ekind, eval_, eoff = self._next()
                    if ekind != "num" or "/" in eval_:
                        raise PolyParseError(f"exponent must be an integer at offset {eoff}")
                    e = int(eval_)
                exps[self.ring._pos[val]] += e
            else:
                raise PolyParseError(f"unexpected {val!r} at offset {off}")
            tok = self._peek()
            if tok and tok[0] == "op" and tok[1] == "*":
                self._next()
                continue
            return tuple(exps), coeff


class Polynomial:
    """An immutable polynomial; terms sorted descending by the ring order.

    Zero is the empty term tuple.  Terms never carry zero coefficients or
    duplicate monomials.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: tuple[tuple[tuple[int, ...], Fraction], ...]):
        # assumes normalized input; use ring.poly()/parse() to build safely
        self.ring = ring
        self.terms = terms

    # -- basic queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or sum(self.terms[0][0]) == 0

    def constant_value(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms[0][1]

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(exps) for exps, _ in self.terms)

    def leading_term(self, order: MonomialOrder | None = None) -> tuple[tuple[int, ...], Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        if order is None or order == self.ring.order:
            return self.terms[0]
        exps = max((e for e, _ in self.terms), key=order.key)
        return exps, dict(self.terms)[exps]

    def leading_monomial(self, order: MonomialOrder | None = None) -> tuple[int, ...]:
        return self.leading_term(order)[0]

    def leading_coeff(self, order: MonomialOrder | None = None) -> Fraction:
        return self.leading_term(order)[1]

    def variables(self) -> frozenset[str]:
        used = set()
        for exps, _ in self.terms:
            for i, e in enumerate(exps):
                if e:
                    used.add(self.ring.names[i])
        return frozenset(used)

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        target = tuple(exps)
        for e, c in self.terms:
            if e == target:
                return c
        return Fraction(0)

    # -- arithmetic ----------------------------------------------------

    def _check_ring(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise RingMismatchError(
                f"mixed rings: {self.ring!r} vs {other.ring!r}"
            )

    def _coerce(self, other) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            self._check_ring(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc = dict(self.terms)
        for exps, coeff in other.terms:
            acc[exps] = acc.get(exps, Fraction(0)) + coeff
        return self.ring.poly(acc)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if c == 0:
                return self.ring.zero
            return Polynomial(self.ring, tuple((e, c * k) for e, k in self.terms))
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_ring(other)
        acc: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                pe = tuple(a + b for a, b in zip(e1, e2))
                acc[pe] = acc.get(pe, Fraction(0)) + c1 * c2
        return self.ring.poly(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one
        for _ in range(n):
            result = result * self
        return result

    def monic(self, order: MonomialOrder | None = None) -> "Polynomial":
        if not self.terms:
            return self
        lc = self.leading_coeff(order)
        if lc == 1:
            return self
        return self * (Fraction(1) / lc)

    # -- substitution and evaluation -----------------------------------

    def evaluate(self, values: Mapping[str, Fraction | int]) -> Fraction:
        """Evaluate at a rational point; every used variable must be assigned."""
        point = {}
        for nm in self.variables():
            if nm not in values:
                raise ValueError(f"no value for variable {nm!r}")
            point[self.ring._pos[nm]] = Fraction(values[nm])
        total = Fraction(0)
        for exps, coeff in self.terms:
            val = coeff
            for i, e in enumerate(exps):
                if e:
                    val *= point[i] ** e
            total += val
        return total

    def substitute(self, replacements: Mapping[str, "Polynomial"]) -> "Polynomial":
        """Substitute polynomials (from the same ring) for variables."""
        table = {}
        for nm, q in replacements.items():
            if nm not in self.ring._pos:
                raise ValueError(f"no variable {nm!r} in this ring")
            self._check_ring(q)
            table[self.ring._pos[nm]] = q
        result = self.ring.zero
        for exps, coeff in self.terms:
            residual = [0] * self.ring.nvars
            factor = self.ring.const(coeff)
            for i, e in enumerate(exps):
                if not e:
                    continue
                if i in table:
                    factor = factor * table[i] ** e
                else:
                    residual[i] = e
            result = result + factor * self.ring.monomial(residual)
        return result

    # -- comparisons and rendering -------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == Fraction(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_value())
        return hash((self.ring.names, self.terms))

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for pos, (exps, coeff) in enumerate(self.terms):
            factors = []
            for i, e in enumerate(exps):
                if e == 1:
                    factors.append(self.ring.names[i])
                elif e > 1:
                    factors.append(f"{self.ring.names[i]}^{e}")
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            if pos == 0:
                chunks.append(("-" if coeff < 0 else "") + body)
            else:
                chunks.append((" - " if coeff < 0 else " + ") + body)
        return "".join(chunks)

    def __repr__(self):
        return str(self)
