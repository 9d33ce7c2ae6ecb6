"""Sparse polynomials with exact coefficients, plus their text grammar.

A polynomial is a finite map from Monomial to a nonzero field element.
Every operation normalizes, so zero coefficients are never observable and
equality is plain structural comparison.

Text grammar (whitespace ignored)::

    poly   := ["+"|"-"] term (("+"|"-") term)* | "0"
    term   := [coef "*"] factor ("*" factor)* | coef
    factor := "x" index ["^" exponent]
    coef   := integer | integer "/" integer

Example: ``3*x1^2*x2 - 1/2*x3``.
"""

from __future__ import annotations

import re

from .errors import ParseError
from .fields import Field
from .monomials import Monomial, ONE


class Polynomial:
    """An immutable sparse polynomial over a fixed exact field."""

    __slots__ = ("field", "_terms", "_key")

    def __init__(self, field: Field, terms=()):
        self.field = field
        cleaned = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for mono, coeff in items:
            if not isinstance(mono, Monomial):
                raise TypeError(f"expected Monomial key, got {type(mono).__name__}")
            coeff = field.of(coeff)
            if mono in cleaned:
                coeff = field.add(cleaned[mono], coeff)
            if coeff == field.zero():
                cleaned.pop(mono, None)
            else:
                cleaned[mono] = coeff
        self._terms = cleaned
        self._key = tuple(sorted(cleaned.items(), key=lambda t: t[0].sort_key()))

    # -- construction helpers ------------------------------------------

    @classmethod
    def zero(cls, field: Field) -> "Polynomial":
        return cls(field)

    @classmethod
    def constant(cls, field: Field, value) -> "Polynomial":
        return cls(field, {ONE: value})

    @classmethod
    def monomial(cls, field: Field, mono: Monomial, coeff=1) -> "Polynomial":
        return cls(field, {mono: coeff})

    @classmethod
    def variable(cls, field: Field, index: int) -> "Polynomial":
        return cls(field, {Monomial({index: 1}): 1})

    # -- inspection -----------------------------------------------------

    def terms(self):
        """The (monomial, coefficient) pairs in display order."""
        return self._key

    def coefficient(self, mono: Monomial):
        """Coefficient of a monomial, zero if absent."""
        return self._terms.get(mono, self.field.zero())

    def monomials(self):
        return tuple(m for m, _ in self._key)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self):
        """Total degree, or None for the zero polynomial."""
        if not self._terms:
            return None
        return max(m.degree for m in self._terms)

    def max_index(self) -> int:
        """Largest variable index appearing; 0 for constants."""
        best = 0
        for m in self._terms:
            if m.items():
                best = max(best, m.items()[-1][0])
        return best

    def is_homogeneous(self, d: int) -> bool:
        """True when every term has degree exactly d (vacuously for zero)."""
        return all(m.degree == d for m in self._terms)

    # -- arithmetic -----------------------------------------------------

    def _require_same_field(self, other: "Polynomial"):
        if self.field != other.field:
            raise ValueError(f"field mismatch: {self.field!r} vs {other.field!r}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._require_same_field(other)
        merged = dict(self._terms)
        f = self.field
        for m, c in other._terms.items():
            merged[m] = f.add(merged.get(m, f.zero()), c)
        return Polynomial(f, merged)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        f = self.field
        return Polynomial(f, {m: f.neg(c) for m, c in self._terms.items()})

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._require_same_field(other)
        f = self.field
        out = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                c = f.mul(c1, c2)
                out[m] = f.add(out.get(m, f.zero()), c)
        return Polynomial(f, out)

    def scaled(self, scalar) -> "Polynomial":
        """Multiply by a field element."""
        f = self.field
        scalar = f.of(scalar)
        return Polynomial(f, {m: f.mul(c, scalar) for m, c in self._terms.items()})

    def mono_shifted(self, mono: Monomial) -> "Polynomial":
        """Multiply every term by a monomial."""
        return Polynomial(self.field, {m * mono: c for m, c in self._terms.items()})

    def graded_part(self, d: int) -> "Polynomial":
        """The sum of terms whose monomial has degree exactly d."""
        if d < 0:
            raise ValueError(f"degree must be nonnegative, got {d}")
        return Polynomial(
            self.field, {m: c for m, c in self._terms.items() if m.degree == d}
        )

    def permuted(self, sigma) -> "Polynomial":
        """Relabel every variable index through sigma, linearly extended."""
        return Polynomial(
            self.field, [(m.permuted(sigma), c) for m, c in self._terms.items()]
        )

    # -- comparison and display ------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field == other.field and self._key == other._key

    def __hash__(self):
        return hash((self.field, self._key))

    def __repr__(self):
        return f"Polynomial({self.field!r}, {self!s})"

    def __str__(self):
        return format_polynomial(self)


def graded_part(p: Polynomial, d: int) -> Polynomial:
    return p.graded_part(d)


def format_polynomial(p: Polynomial) -> str:
    """Render in the text grammar; terms by degree, then index-exponent order."""
    if p.is_zero():
        return "0"
    f = p.field
    chunks = []
    for mono, coeff in p.terms():
        text = f.format(coeff)
        negative = text.startswith("-")
        if negative:
            text = text[1:]
        if mono.is_one():
            body = text
        elif text == "1":
            body = str(mono)
        else:
            body = f"{text}*{mono}"
        if not chunks:
            chunks.append(f"-{body}" if negative else body)
        else:
            chunks.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(chunks)


_TOKEN = re.compile(r"\s*(?:(x\d+)|(\d+)|([+\-*/^])|(\S))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        var, num, op, bad = m.groups()
        if bad is not None:
            raise ParseError(f"unexpected character {bad!r} in polynomial")
        if var is not None:
            tokens.append(("var", int(var[1:])))
        elif num is not None:
            tokens.append(("int", num))
        else:
            tokens.append(("op", op))
        pos = m.end()
    return tokens


class _PolyParser:
    def __init__(self, tokens, field: Field):
        self.tokens = tokens
        self.pos = 0
        self.field = field

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def parse(self) -> Polynomial:
        field = self.field
        total = Polynomial.zero(field)
        sign = 1
        kind, value = self.peek()
        if kind == "op" and value in "+-":
            self.take()
            sign = -1 if value == "-" else 1
        while True:
            term = self.parse_term()
            if sign < 0:
                term = -term
            total = total + term
            kind, value = self.peek()
            if kind is None:
                return total
            if kind == "op" and value in "+-":
                self.take()
                sign = -1 if value == "-" else 1
                continue
            raise ParseError(f"expected '+' or '-' before {value!r}")

    def parse_term(self) -> Polynomial:
        field = self.field
        kind, value = self.peek()
        coeff = field.one()
        if kind == "int":
            self.take()
            coeff_text = value
            kind, value = self.peek()
            if kind == "op" and value == "/":
                self.take()
                kind, value = self.take()
                if kind != "int":
                    raise ParseError("expected integer after '/'")
                coeff_text += "/" + value
                kind, value = self.peek()
            coeff = field.parse(coeff_text)
            if kind == "op" and value == "*":
                self.take()
            else:
                return Polynomial.constant(field, coeff)
        mono = self.parse_factor()
        while True:
            kind, value = self.peek()
            if kind == "op" and value == "*":
                self.take()
                mono = mono * self.parse_factor()
            else:
                break
        return Polynomial.monomial(field, mono, coeff)

    def parse_factor(self) -> Monomial:
        kind, value = self.take()
        if kind != "var":
            raise ParseError(f"expected a variable factor, got {value!r}")
        index = value
        if index < 1:
            raise ParseError(f"variable index must be positive, got x{index}")
        exponent = 1
        kind, nxt = self.peek()
        if kind == "op" and nxt == "^":
            self.take()
            kind, nxt = self.take()
            if kind != "int":
                raise ParseError("expected integer exponent after '^'")
            exponent = int(nxt)
        return Monomial({index: exponent} if exponent else {})


def parse_polynomial(text: str, field: Field) -> Polynomial:
    """Parse the text grammar above into a Polynomial over the given field."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial")
    if tokens == [("int", "0")]:
        return Polynomial.zero(field)
    return _PolyParser(tokens, field).parse()
