"""Multisets of positive integers, their types, and the matching monomials.

The variables are x1, x2, x3, ... indexed by positive integers.  A multiset
corresponds to the monomial whose exponents are the multiplicities, and the
*type* of either object is the partition obtained by sorting the
multiplicities in weakly decreasing order.  Relabelling the indices by any
permutation changes the multiset but never its type, so the type is a
complete invariant of the orbit of a monomial under index permutations.
"""

from __future__ import annotations

from typing import Iterable, Mapping


class Partition(tuple):
    """A weakly decreasing tuple of positive integers; () is allowed."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(a) for a in parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")
        if parts and parts[-1] < 1:
            raise ValueError(f"parts must be positive, got {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        """Sum of the parts."""
        return sum(self)

    def __repr__(self):
        return f"Partition({tuple(self)})"

    def __str__(self):
        return "(" + ",".join(str(a) for a in self) + ")"


def _clean_entries(entries) -> tuple:
    """Normalize an index->count mapping: sorted pairs, no zero counts."""
    if isinstance(entries, Mapping):
        items = entries.items()
    else:
        items = entries
    cleaned = {}
    for index, count in items:
        index = int(index)
        count = int(count)
        if index < 1:
            raise ValueError(f"indices must be positive integers, got {index}")
        if count < 0:
            raise ValueError(f"counts must be nonnegative, got {count}")
        if count:
            cleaned[index] = cleaned.get(index, 0) + count
    return tuple(sorted(cleaned.items()))


class Monomial:
    """An immutable sparse monomial: a map from variable index to exponent.

    The empty monomial is the constant 1.  Instances hash and compare by
    structure, so they serve as dictionary keys in polynomials.
    """

    __slots__ = ("_exps", "_degree", "_hash")

    def __init__(self, exponents=()):
        self._exps = _clean_entries(exponents)
        self._degree = sum(e for _, e in self._exps)
        self._hash = hash(self._exps)

    @property
    def degree(self) -> int:
        return self._degree

    def items(self):
        """Pairs (index, exponent), sorted by index."""
        return self._exps

    def indices(self) -> tuple:
        return tuple(i for i, _ in self._exps)

    def exponent(self, index: int) -> int:
        for i, e in self._exps:
            if i == index:
                return e
        return 0

    def is_one(self) -> bool:
        return not self._exps

    def __mul__(self, other: "Monomial") -> "Monomial":
        merged = dict(self._exps)
        for i, e in other._exps:
            merged[i] = merged.get(i, 0) + e
        return Monomial(merged)

    def permuted(self, sigma) -> "Monomial":
        """Relabel indices through sigma (any injective int -> int map).

        sigma may be a Permutation or any callable; it must not collide on
        the indices of this monomial.
        """
        pairs = [(sigma(i), e) for i, e in self._exps]
        if len({i for i, _ in pairs}) != len(pairs):
            raise ValueError("index map is not injective on this monomial")
        return Monomial(pairs)

    def sort_key(self):
        """Display order: degree first, then the (index, exponent) pairs."""
        return (self._degree, self._exps)

    def __eq__(self, other):
        return isinstance(other, Monomial) and self._exps == other._exps

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Monomial({dict(self._exps)})"

    def __str__(self):
        if not self._exps:
            return "1"
        factors = []
        for i, e in self._exps:
            factors.append(f"x{i}" if e == 1 else f"x{i}^{e}")
        return "*".join(factors)


class Multiset:
    """A finite multiset of positive integers (index -> multiplicity).

    Structurally the same data as a Monomial; kept as its own role because
    the two are related by a bijection, not an identity.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries=()):
        self._entries = _clean_entries(entries)

    @classmethod
    def from_elements(cls, elements: Iterable[int]) -> "Multiset":
        """Build from a listing with repetitions, e.g. [1, 1, 1, 2, 3, 3]."""
        counts = {}
        for x in elements:
            counts[x] = counts.get(x, 0) + 1
        return cls(counts)

    def items(self):
        return self._entries

    def multiplicity(self, index: int) -> int:
        for i, m in self._entries:
            if i == index:
                return m
        return 0

    def __len__(self):
        return sum(m for _, m in self._entries)

    def __eq__(self, other):
        return isinstance(other, Multiset) and self._entries == other._entries

    def __hash__(self):
        return hash(("Multiset", self._entries))

    def __repr__(self):
        return f"Multiset({dict(self._entries)})"


ONE = Monomial()


def type_of(m) -> Partition:
    """The type: multiplicities (or exponents) sorted weakly decreasing."""
    counts = sorted((c for _, c in m.items()), reverse=True)
    return Partition(counts)


def multiset_to_monomial(m: Multiset) -> Monomial:
    """The monomial whose exponent at each index is the multiplicity."""
    return Monomial(m.items())


def monomial_to_multiset(m: Monomial) -> Multiset:
    """Inverse of multiset_to_monomial."""
    return Multiset(m.items())


def canonical_monomial(shape: Partition) -> Monomial:
    """The orbit representative of a type: largest exponents on x1, x2, ...

    canonical_monomial((3, 2, 1)) is x1^3*x2^2*x3; any monomial of the same
    type is an index relabelling of it.
    """
    return Monomial((i, e) for i, e in enumerate(shape, start=1))
