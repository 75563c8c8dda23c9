"""Sparse multivariate polynomials over an exact field.

A polynomial is a map from exponent tuples to nonzero coefficients. The ring
carries the variable names, the coefficient field and the monomial order used
for leading terms; arithmetic only requires matching names and field.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import ArityMismatch, NotBinaryForm, ParseError, RingMismatch
from .scalars import QQ, Field, Residue, format_scalar

Monomial = tuple


@lru_cache(maxsize=1 << 18)
def _grevlex_key(e: tuple) -> tuple:
    return (sum(e), tuple([-x for x in reversed(e)]))


class MonomialOrder:
    """A term order: ``grevlex``, ``lex`` or ``block-elim`` with a first block size.

    ``key(e)`` maps an exponent tuple to a sort key; bigger key means bigger monomial.
    """

    __slots__ = ("tag", "block", "key")

    def __init__(self, tag: str, block: int = 0):
        if tag not in ("grevlex", "lex", "block-elim"):
            raise ValueError(f"unknown monomial order {tag!r}")
        if tag == "block-elim" and block < 1:
            raise ValueError("block-elim needs a positive first block size")
        self.tag = tag
        self.block = block if tag == "block-elim" else 0
        if tag == "grevlex":
            self.key = _grevlex_key
        elif tag == "lex":
            self.key = _lex_key
        else:
            k = block

            @lru_cache(maxsize=1 << 18)
            def key(e, k=k):
                return (_grevlex_key(e[:k]), _grevlex_key(e[k:]))

            self.key = key

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and (self.tag, self.block) == (other.tag, other.block)

    def __hash__(self):
        return hash((self.tag, self.block))

    def __repr__(self):
        if self.tag == "block-elim":
            return f"MonomialOrder('block-elim', {self.block})"
        return f"MonomialOrder({self.tag!r})"


def _lex_key(e):
    return e


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def block_elim(first_block: int) -> MonomialOrder:
    return MonomialOrder("block-elim", first_block)


def mono_cmp(order: MonomialOrder, m1: Sequence[int], m2: Sequence[int]) -> int:
    """-1, 0 or 1 as ``m1`` is smaller than, equal to or bigger than ``m2``."""
    if len(m1) != len(m2):
        raise ArityMismatch(f"{len(m1)} vs {len(m2)} exponents")
    k1, k2 = order.key(tuple(m1)), order.key(tuple(m2))
    return (k1 > k2) - (k1 < k2)


def mono_divides(a: tuple, b: tuple) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def mono_lcm(a: tuple, b: tuple) -> tuple:
    return tuple([x if x > y else y for x, y in zip(a, b)])


def mono_mul(a: tuple, b: tuple) -> tuple:
    return tuple([x + y for x, y in zip(a, b)])


def mono_div(a: tuple, b: tuple) -> tuple:
    return tuple([x - y for x, y in zip(a, b)])


def monomials_of_degree(n: int, d: int) -> list:
    """All exponent tuples in ``n`` variables of total degree ``d``, lex-descending."""
    if n == 0:
        return [()] if d == 0 else []
    if n == 1:
        return [(d,)]
    out = []
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - first):
            out.append((first,) + rest)
    return out


class PolyRing:
    """Polynomial ring ``field[names]`` with a monomial order."""

    __slots__ = ("names", "field", "order", "nvars", "_zero_mono")

    def __init__(self, names: Sequence[str] | int, field: Field = QQ, order: MonomialOrder = GREVLEX):
        if isinstance(names, int):
            names = [f"x{i}" for i in range(names)]
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        self.field = field
        self.order = order
        self.nvars = len(self.names)
        self._zero_mono = (0,) * self.nvars

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.names == other.names
            and self.field == other.field
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.names, self.field, self.order))

    def __repr__(self):
        return f"PolyRing({list(self.names)}, {self.field!r}, {self.order!r})"

    def compatible(self, other: "PolyRing") -> bool:
        return self.names == other.names and self.field == other.field

    def with_order(self, order: MonomialOrder) -> "PolyRing":
        if order == self.order:
            return self
        return PolyRing(self.names, self.field, order)

    def with_field(self, field: Field) -> "PolyRing":
        return PolyRing(self.names, field, self.order)

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.constant(1)

    def constant(self, c) -> "Poly":
        c = self.field(c)
        return Poly(self, {self._zero_mono: c} if c else {})

    def gens(self) -> list:
        out = []
        for i in range(self.nvars):
            e = [0] * self.nvars
            e[i] = 1
            out.append(Poly(self, {tuple(e): self.field.one}))
        return out

    def gen(self, i: int) -> "Poly":
        return self.gens()[i]

    def monomial(self, exps: Sequence[int], c=1) -> "Poly":
        if len(exps) != self.nvars:
            raise ArityMismatch(f"expected {self.nvars} exponents")
        c = self.field(c)
        return Poly(self, {tuple(exps): c} if c else {})

    def from_dict(self, terms: dict) -> "Poly":
        f = self.field
        clean = {}
        for m, c in terms.items():
            m = tuple(m)
            if len(m) != self.nvars:
                raise ArityMismatch(f"expected {self.nvars} exponents, got {m}")
            c = f(c)
            if c:
                clean[m] = c
        return Poly(self, clean)

    def linear_form(self, coeffs: Sequence) -> "Poly":
        terms = {}
        for i, c in enumerate(coeffs):
            c = self.field(c)
            if c:
                e = [0] * self.nvars
                e[i] = 1
                terms[tuple(e)] = c
        return Poly(self, terms)

    def parse(self, text: str) -> "Poly":
        return parse_poly(self, text)


class Poly:
    """Immutable sparse polynomial. ``terms`` must never be mutated after construction."""

    __slots__ = ("ring", "terms", "_lm")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._lm = None

    # -- structure -----------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.ring._zero_mono in self.terms)

    def variables_used(self) -> set:
        used = set()
        for m in self.terms:
            for i, x in enumerate(m):
                if x:
                    used.add(i)
        return used

    def lm(self) -> tuple:
        if self._lm is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading monomial")
            self._lm = max(self.terms, key=self.ring.order.key)
        return self._lm

    def lc(self):
        return self.terms[self.lm()]

    def monic(self) -> "Poly":
        if not self.terms:
            return self
        c = self.lc()
        if c == 1:
            return self
        inv = 1 / c
        return Poly(self.ring, {m: v * inv for m, v in self.terms.items()})

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda t: self.ring.order.key(t[0]), reverse=True)

    def coefficient(self, mono: Sequence[int]):
        return self.terms.get(tuple(mono), self.ring.field.zero)

    # -- arithmetic ----------------------------------------------------
    def _check(self, other: "Poly"):
        if not self.ring.compatible(other.ring):
            raise RingMismatch(f"{self.ring!r} vs {other.ring!r}")

    def _lift(self, other):
        if isinstance(other, Poly):
            self._check(other)
            return other
        return self.ring.constant(other)

    def __add__(self, other):
        other = self._lift(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m)
            if s is None:
                terms[m] = c
            else:
                s = s + c
                if s:
                    terms[m] = s
                else:
                    del terms[m]
        return Poly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, c) -> "Poly":
        c = self.ring.field(c)
        if not c:
            return self.ring.zero()
        return Poly(self.ring, {m: v * c for m, v in self.terms.items()})

    def mul_term(self, mono: tuple, c) -> "Poly":
        """Multiply by the single term ``c * x^mono``."""
        if not c:
            return self.ring.zero()
        return Poly(self.ring, {mono_mul(m, mono): v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        self._check(other)
        if len(self.terms) > len(other.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        terms: dict = {}
        get = terms.get
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = tuple([x + y for x, y in zip(m1, m2)])
                s = get(m)
                terms[m] = c1 * c2 if s is None else s + c1 * c2
        return Poly(self.ring, {m: c for m, c in terms.items() if c})

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        out = self.ring.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring.compatible(other.ring) and self.terms == other.terms
        if self.is_constant():
            try:
                return self.coefficient(self.ring._zero_mono) == self.ring.field(other)
            except Exception:
                return NotImplemented
        return False

    def __hash__(self):
        return hash((self.ring.names, frozenset(self.terms.items())))

    # -- substitution --------------------------------------------------
    def evaluate(self, point: Sequence):
        """Value at ``point`` (field elements, or polynomials of a common ring)."""
        if len(point) != self.ring.nvars:
            raise ArityMismatch(f"expected {self.ring.nvars} coordinates")
        if any(isinstance(p, Poly) for p in point):
            return self.compose(point)
        field = self.ring.field
        vals = [field(p) for p in point]
        total = field.zero
        for m, c in self.terms.items():
            t = c
            for v, e in zip(vals, m):
                if e:
                    t = t * v**e
            total = total + t
        return total

    def compose(self, images: Sequence["Poly"]) -> "Poly":
        """Substitute variable ``i`` by ``images[i]`` (all in one target ring)."""
        if len(images) != self.ring.nvars:
            raise ArityMismatch(f"expected {self.ring.nvars} images")
        target = next(p.ring for p in images if isinstance(p, Poly))
        images = [p if isinstance(p, Poly) else target.constant(p) for p in images]
        powers: list = [{} for _ in images]

        def power(i, e):
            cache = powers[i]
            if e not in cache:
                cache[e] = images[i] ** e
            return cache[e]

        out = target.zero()
        for m, c in self.terms.items():
            t = target.constant(c)
            for i, e in enumerate(m):
                if e:
                    t = t * power(i, e)
            out = out + t
        return out

    def embed(self, target: PolyRing, positions: Sequence[int]) -> "Poly":
        """Rename variables: variable ``i`` becomes ``target`` variable ``positions[i]``."""
        if len(positions) != self.ring.nvars:
            raise ArityMismatch("positions must list every source variable")
        n = target.nvars
        terms = {}
        for m, c in self.terms.items():
            e = [0] * n
            for i, x in enumerate(m):
                if x:
                    e[positions[i]] += x
            terms[tuple(e)] = c
        return Poly(target, terms)

    def with_ring(self, ring: PolyRing) -> "Poly":
        """Same terms viewed in a ring with the same variables but another order."""
        if ring.names != self.ring.names or ring.field != self.ring.field:
            raise RingMismatch("with_ring only changes the monomial order")
        return Poly(ring, self.terms)

    def to_field(self, field: Field) -> "Poly":
        ring = self.ring.with_field(field)
        return ring.from_dict({m: field(c) if not isinstance(c, Residue) else c for m, c in self.terms.items()})

    # -- display -------------------------------------------------------
    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"


def format_poly(f: Poly) -> str:
    if not f.terms:
        return "0"
    names = f.ring.names
    pieces = []
    for m, c in f.sorted_terms():
        factors = []
        for name, e in zip(names, m):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        if isinstance(c, Residue):
            neg, mag = False, format_scalar(c)
        else:
            neg, mag = c < 0, format_scalar(abs(c))
        if factors:
            body = "*".join(factors) if mag == "1" else mag + "*" + "*".join(factors)
        else:
            body = mag
        if not pieces:
            pieces.append("-" + body if neg else body)
        else:
            pieces.append(("- " if neg else "+ ") + body)
    return " ".join(pieces)


_TERM_RE = re.compile(r"([+-]?)([^+-]+)")


def parse_poly(ring: PolyRing, text: str) -> Poly:
    """Read ``"3/2*x0^2*x1 - x2^3"`` style text."""
    s = text.replace(" ", "")
    if not s:
        raise ParseError("empty polynomial")
    index = {name: i for i, name in enumerate(ring.names)}
    field = ring.field
    out = ring.zero()
    pos = 0
    for match in _TERM_RE.finditer(s):
        if match.start() != pos:
            raise ParseError(f"cannot parse {text!r}")
        pos = match.end()
        sign, body = match.groups()
        coeff = Fraction(-1 if sign == "-" else 1)
        exps = [0] * ring.nvars
        for factor in body.split("*"):
            if not factor:
                raise ParseError(f"empty factor in {text!r}")
            name, _, power = factor.partition("^")
            if name in index:
                try:
                    e = int(power) if power else 1
                except ValueError as exc:
                    raise ParseError(f"bad exponent in {factor!r}") from exc
                exps[index[name]] += e
            else:
                if power:
                    raise ParseError(f"unknown variable {name!r}")
                try:
                    coeff *= Fraction(factor)
                except (ValueError, ZeroDivisionError) as exc:
                    raise ParseError(f"unknown variable or bad number {factor!r}") from exc
        out = out + ring.monomial(exps, field(coeff))
    if pos != len(s):
        raise ParseError(f"cannot parse {text!r}")
    return out


def poly_arith(op: str, f: Poly, g) -> Poly:
    """``op`` in add, sub, mul, scale."""
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "scale":
        return f.scale(g)
    raise ValueError(f"unknown op {op!r}")


# -- univariate helpers (coefficient lists, lowest degree first) ----------

def _trim(a: list) -> list:
    while a and not a[-1]:
        a.pop()
    return a


def udivmod(a: list, b: list) -> tuple:
    a = _trim(list(a))
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    q = [0 * b[-1]] * max(len(a) - len(b) + 1, 0)
    inv = 1 / b[-1]
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        c = a[-1] * inv
        q[shift] = c
        for i, bc in enumerate(b):
            a[i + shift] = a[i + shift] - c * bc
        a.pop()
        _trim(a)
    return _trim(q), a


def ugcd(a: list, b: list) -> list:
    a = _trim(list(a))
    b = _trim(list(b))
    while b:
        _, r = udivmod(a, b)
        a, b = b, r
    if not a:
        return a
    inv = 1 / a[-1]
    return [c * inv for c in a]


def uderiv(a: list) -> list:
    return _trim([a[i] * i for i in range(1, len(a))])


def usquarefree(a: list) -> list:
    """``a / gcd(a, a')``, made monic."""
    a = _trim(list(a))
    g = ugcd(a, uderiv(a))
    if not g:
        g = [1]
    q, r = udivmod(a, g)
    assert not r
    inv = 1 / q[-1]
    return [c * inv for c in q]


def binary_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd of two binary forms (or two univariate polynomials).

    Each form is written as ``x0^a * h`` with ``h`` not divisible by ``x0``;
    the ``h`` parts are dehomogenized at ``x0 = 1``, Euclid runs on the
    univariate images, and the result is rehomogenized.
    """
    f._check(g)
    ring = f.ring
    if ring.nvars == 1:
        ga = ugcd(_to_uni(f, 0), _to_uni(g, 0))
        return ring.from_dict({(i,): c for i, c in enumerate(ga)}).monic() if ga else ring.zero()
    if ring.nvars != 2:
        raise NotBinaryForm(f"binary_gcd needs a 2-variable ring, got {ring.nvars}")
    for h in (f, g):
        if not h.is_homogeneous():
            raise NotBinaryForm(f"{h} is not homogeneous")
    if not f:
        return g.monic()
    if not g:
        return f.monic()
    a = min(m[0] for m in f.terms)
    b = min(m[0] for m in g.terms)
    uf = _to_uni(f, 1)
    ug = _to_uni(g, 1)
    h = ugcd(uf, ug)
    e = len(h) - 1
    shift = min(a, b)
    terms = {(shift + e - i, i): c for i, c in enumerate(h) if c}
    return Poly(ring, terms).monic()


def _to_uni(f: Poly, var: int) -> list:
    """Coefficient list in variable ``var`` after setting every other variable to 1."""
    if not f:
        return []
    n = max(m[var] for m in f.terms)
    out = [f.ring.field.zero] * (n + 1)
    for m, c in f.terms.items():
        out[m[var]] = out[m[var]] + c
    return _trim(out)


def divide_exact(f: Poly, g: Poly) -> Poly:
    """Quotient ``f / g`` when ``g`` divides ``f``; raises ``ValueError`` otherwise."""
    f._check(g)
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    key = f.ring.order.key
    glm = g.lm()
    ginv = 1 / g.terms[glm]
    rem = dict(f.terms)
    quot = {}
    while rem:
        m = max(rem, key=key)
        if not mono_divides(glm, m):
            raise ValueError("not an exact division")
        q = mono_div(m, glm)
        c = rem[m] * ginv
        quot[q] = c
        for gm, gc in g.terms.items():
            mm = mono_mul(gm, q)
            v = rem.get(mm, 0) - c * gc
            if v:
                rem[mm] = v
            else:
                rem.pop(mm, None)
    return Poly(f.ring, quot)
