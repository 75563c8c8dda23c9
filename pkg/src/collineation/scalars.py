"""Exact coefficient fields: the rationals and prime fields GF(p).

Rationals are plain :class:`fractions.Fraction` values. Prime field elements
are :class:`Residue` instances carrying their modulus, so that mixing two
different fields is caught instead of silently producing garbage.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from .errors import BadReduction, DivisionByZero, FieldMismatch, ParseError

DEFAULT_PRIME = 32003


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic for n < 3.3e24
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Residue:
    """An element of GF(p), always stored reduced into ``[0, p)``."""

    __slots__ = ("v", "p")

    def __init__(self, value: int, p: int):
        self.v = value % p
        self.p = p

    def _coerce(self, other) -> int:
        if isinstance(other, Residue):
            if other.p != self.p:
                raise FieldMismatch(f"GF({self.p}) vs GF({other.p})")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            raise FieldMismatch(f"cannot mix GF({self.p}) with a rational")
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.v * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.v, self.p)

    def inverse(self) -> "Residue":
        if self.v == 0:
            raise DivisionByZero(f"0 has no inverse in GF({self.p})")
        return Residue(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * Residue(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(o, self.p) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return Residue(pow(self.v, e, self.p), self.p)

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"Residue({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


Scalar = Union[Fraction, Residue]


class RationalField:
    """The field QQ; elements are ``Fraction``."""

    name = "qq"
    characteristic = 0

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def __call__(self, x) -> Fraction:
        if isinstance(x, Residue):
            raise FieldMismatch("cannot read a GF(p) residue as a rational")
        if isinstance(x, str):
            return parse_rational(x)
        return Fraction(x)

    def contains(self, x) -> bool:
        return isinstance(x, (Fraction, int)) and not isinstance(x, bool)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("qq")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """The field GF(p) for a prime p."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"gf:{p}"
        self.zero = Residue(0, p)
        self.one = Residue(1, p)

    def __call__(self, x) -> Residue:
        if isinstance(x, Residue):
            if x.p != self.p:
                raise FieldMismatch(f"GF({x.p}) element into GF({self.p})")
            return x
        if isinstance(x, str):
            x = parse_rational(x)
        if isinstance(x, Fraction):
            return modp_embed(x, self.p)
        return Residue(int(x), self.p)

    def contains(self, x) -> bool:
        return isinstance(x, Residue) and x.p == self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("gf", self.p))

    def __repr__(self):
        return f"GF({self.p})"


Field = Union[RationalField, PrimeField]

QQ = RationalField()


def GF(p: int = DEFAULT_PRIME) -> PrimeField:
    return PrimeField(p)


def parse_field(spec: str) -> Field:
    """Read ``"qq"`` or ``"gf:<p>"``."""
    s = spec.strip().lower()
    if s == "qq":
        return QQ
    if s.startswith("gf:"):
        try:
            p = int(s[3:])
        except ValueError as exc:
            raise ParseError(f"bad field {spec!r}") from exc
        return PrimeField(p)
    raise ParseError(f"bad field {spec!r}; expected 'qq' or 'gf:<p>'")


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational literal {text!r}") from exc


def format_scalar(x: Scalar) -> str:
    """``num/den`` with the denominator dropped when it is 1."""
    if isinstance(x, Residue):
        return str(x.v)
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def modp_embed(q, p: int) -> Residue:
    """Image of the rational ``q`` in GF(p)."""
    q = Fraction(q)
    if q.denominator % p == 0:
        raise BadReduction(f"{q} has denominator divisible by {p}")
    return Residue(q.numerator * pow(q.denominator, -1, p), p)


def field_of(x) -> Field:
    if isinstance(x, Residue):
        return PrimeField(x.p)
    if isinstance(x, (Fraction, int)):
        return QQ
    raise TypeError(f"not a scalar: {x!r}")


def _same_field(a, b):
    fa, fb = field_of(a), field_of(b)
    if fa != fb:
        raise FieldMismatch(f"{fa!r} vs {fb!r}")
    return fa


def scalar_arith(op: str, a: Scalar, b: Scalar | None = None) -> Scalar:
    """Checked field arithmetic; ``op`` is one of add, sub, mul, div, neg, inv."""
    field = field_of(a)
    if b is not None:
        _same_field(a, b)
        b = field(b)
    a = field(a)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    if op in ("div", "inv"):
        num, den = (a, b) if op == "div" else (field.one, a)
        if not den:
            raise DivisionByZero("division by zero")
        return num / den
    raise ValueError(f"unknown op {op!r}")
