"""Exact coefficient fields: arbitrary-precision rationals and prime fields.

A field object provides construction, arithmetic and text formatting for
its elements.  Elements themselves are plain Python values (``Fraction``
for the rationals, ``int`` in ``[0, p)`` for a prime field), so they hash
and compare structurally and can be shared freely.  All arithmetic is
exact; there is no floating point anywhere in this package.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError


class Field:
    """Common interface of the supported coefficient fields."""

    def of(self, value):
        """Coerce an int, Fraction or element into canonical form."""
        raise NotImplementedError

    def zero(self):
        return self.of(0)

    def one(self):
        return self.of(1)

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def parse(self, text: str):
        """Parse a coefficient literal (``3``, ``-4`` or ``1/2`` over Q)."""
        raise NotImplementedError

    def format(self, a) -> str:
        raise NotImplementedError

    @property
    def selector(self) -> str:
        """Text tag identifying the field (``q`` or ``p=<prime>``)."""
        raise NotImplementedError


class Rationals(Field):
    """The field of arbitrary-precision rationals.

    Fraction keeps values in lowest terms with a positive denominator,
    which is exactly the canonical form required here.
    """

    def of(self, value):
        if isinstance(value, float):
            raise TypeError("floating point is not allowed in exact arithmetic")
        return Fraction(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def parse(self, text):
        text = text.strip()
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"invalid rational literal {text!r}") from exc

    def format(self, a) -> str:
        return str(Fraction(a))

    @property
    def selector(self) -> str:
        return "q"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Rationals")

    def __repr__(self):
        return "QQ"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class PrimeField(Field):
    """Integers modulo a prime p < 2**31, stored as canonical residues."""

    def __init__(self, p: int):
        if not isinstance(p, int) or not _is_prime(p):
            raise ValueError(f"modulus must be prime, got {p!r}")
        if p >= 2**31:
            raise ValueError(f"modulus must be < 2**31, got {p}")
        self.p = p

    def of(self, value):
        if isinstance(value, Fraction):
            return self.div(value.numerator % self.p, value.denominator % self.p)
        if isinstance(value, float):
            raise TypeError("floating point is not allowed in exact arithmetic")
        return int(value) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def parse(self, text):
        text = text.strip()
        num, slash, den = text.partition("/")
        try:
            value = int(num, 10) % self.p
        except ValueError as exc:
            raise ParseError(f"invalid integer literal {text!r}") from exc
        if not slash:
            return value
        try:
            d = int(den, 10) % self.p
        except ValueError as exc:
            raise ParseError(f"invalid integer literal {text!r}") from exc
        if d == 0:
            raise ParseError(f"denominator of {text!r} is zero mod {self.p}")
        return self.mul(value, self.inv(d))

    def format(self, a) -> str:
        return str(a % self.p)

    @property
    def selector(self) -> str:
        return f"p={self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = Rationals()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_selector(text: str) -> Field:
    """Resolve a field tag: ``q`` for the rationals, ``p=<prime>`` mod p."""
    text = text.strip().lower()
    if text == "q":
        return QQ
    if text.startswith("p="):
        try:
            p = int(text[2:], 10)
        except ValueError as exc:
            raise ParseError(f"invalid field selector {text!r}") from exc
        try:
            return PrimeField(p)
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
    raise ParseError(f"invalid field selector {text!r} (expected 'q' or 'p=<prime>')")
