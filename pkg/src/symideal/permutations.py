"""Finite-support permutations of the positive integers.

A permutation stores only its non-fixed points, so elements of every
finite symmetric group (and their union) share one representation.  The
action on monomials and polynomials is index relabelling: x_i maps to
x_{sigma(i)}; see Monomial.permuted / Polynomial.permuted.
"""

from __future__ import annotations

import itertools
import re

from .errors import ParseError


class Permutation:
    """A bijection of the positive integers that fixes all but finitely many."""

    __slots__ = ("_map",)

    def __init__(self, mapping=()):
        items = mapping.items() if hasattr(mapping, "items") else mapping
        moved = {}
        for i, j in items:
            i, j = int(i), int(j)
            if i < 1 or j < 1:
                raise ValueError(f"permutation entries must be positive, got {i}->{j}")
            if i in moved:
                raise ValueError(f"duplicate domain point {i}")
            moved[i] = j
        moved = {i: j for i, j in moved.items() if i != j}
        if len(set(moved.values())) != len(moved):
            raise ValueError("mapping is not injective")
        if set(moved.values()) != set(moved.keys()):
            raise ValueError("mapping does not permute its support")
        self._map = moved

    @classmethod
    def identity(cls) -> "Permutation":
        return cls()

    @classmethod
    def from_cycles(cls, cycles) -> "Permutation":
        """Build from disjoint cycles, e.g. [(1, 2), (3, 5, 4)]."""
        mapping = {}
        for cycle in cycles:
            cycle = [int(a) for a in cycle]
            for a in cycle:
                if a in mapping:
                    raise ValueError(f"cycles are not disjoint at {a}")
            for k, a in enumerate(cycle):
                mapping[a] = cycle[(k + 1) % len(cycle)]
        return cls(mapping)

    @classmethod
    def transposition(cls, a: int, b: int) -> "Permutation":
        return cls.from_cycles([(a, b)]) if a != b else cls.identity()

    def __call__(self, i: int) -> int:
        return self._map.get(i, i)

    def support(self) -> frozenset:
        """The points actually moved."""
        return frozenset(self._map)

    def max_moved(self) -> int:
        """Largest moved point; 0 for the identity."""
        return max(self._map, default=0)

    def in_sn(self, n: int) -> bool:
        """True when the support lies inside {1..n}."""
        return self.max_moved() <= n

    def is_identity(self) -> bool:
        return not self._map

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: (self * other)(i) = self(other(i))."""
        points = set(self._map) | set(other._map)
        return Permutation({i: self(other(i)) for i in points})

    def inverse(self) -> "Permutation":
        return Permutation({j: i for i, j in self._map.items()})

    def cycles(self):
        """Nontrivial cycles, each starting at its least point, sorted."""
        seen = set()
        out = []
        for start in sorted(self._map):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            j = self._map[start]
            while j != start:
                cycle.append(j)
                seen.add(j)
                j = self._map[j]
            out.append(tuple(cycle))
        return out

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._map == other._map

    def __hash__(self):
        return hash(frozenset(self._map.items()))

    def __repr__(self):
        return f"Permutation.parse({format_permutation(self)!r})"

    def __str__(self):
        return format_permutation(self)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        return parse_permutation(text)


def compose(sigma: Permutation, tau: Permutation) -> Permutation:
    """sigma after tau: apply tau first."""
    return sigma * tau


def format_permutation(sigma: Permutation) -> str:
    """Cycle notation; the identity prints as ``()``."""
    cycles = sigma.cycles()
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(a) for a in c) + ")" for c in cycles)


_CYCLE_TEXT = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str) -> Permutation:
    """Parse cycle notation like ``(1 2)(3 5 4)``; ``()`` is the identity."""
    leftover = _CYCLE_TEXT.sub("", text).strip()
    if leftover or "(" not in text:
        raise ParseError(f"invalid permutation {text!r}")
    cycles = []
    for body in _CYCLE_TEXT.findall(text):
        entries = body.replace(",", " ").split()
        if not entries:
            continue
        try:
            cycle = [int(a) for a in entries]
        except ValueError as exc:
            raise ParseError(f"invalid cycle entries in {text!r}") from exc
        if len(set(cycle)) != len(cycle):
            raise ParseError(f"repeated point inside a cycle in {text!r}")
        cycles.append(cycle)
    try:
        return Permutation.from_cycles(cycles)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def symmetric_group(n: int):
    """All n! permutations with support in {1..n}, in a fixed order."""
    if n < 0:
        raise ValueError(f"group bound must be nonnegative, got {n}")
    points = range(1, n + 1)
    for image in itertools.permutations(points):
        yield Permutation(zip(points, image))


def finite_witness(sigma, f) -> tuple:
    """Replace an arbitrary index bijection by a bounded one agreeing on f.

    sigma may be a Permutation or any callable on positive integers; it must
    be injective on the variable indices of the polynomial f.  Returns
    (N, tau) where tau permutes {1..N} only and tau applied to f equals the
    sigma-relabelling of f.  N is the least natural bound: the maximum of
    each index of f and its image (1 when f has no variables).  tau matches
    sigma on the indices of f and pairs the remaining points of {1..N} in
    increasing order.
    """
    indices = sorted({i for mono, _ in f.terms() for i in mono.indices()})
    if not indices:
        return 1, Permutation.identity()
    images = []
    for i in indices:
        j = int(sigma(i))
        if j < 1:
            raise ValueError(f"index map must stay positive, got {i}->{j}")
        images.append(j)
    if len(set(images)) != len(images):
        raise ValueError("index map collides on the indices of the polynomial")
    if images == indices:
        # sigma fixes every index of f, so the identity in S_1 already works
        return 1, Permutation.identity()
    n_bound = max(max(indices), max(images))
    mapping = dict(zip(indices, images))
    free_domain = [i for i in range(1, n_bound + 1) if i not in mapping]
    used = set(images)
    free_images = [j for j in range(1, n_bound + 1) if j not in used]
    mapping.update(zip(free_domain, free_images))
    return n_bound, Permutation(mapping)
