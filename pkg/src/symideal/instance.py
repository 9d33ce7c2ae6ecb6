"""Instances of symmetric-ideal generators and their rank certificates.

An instance fixes n monomials g_1..g_n of one degree d whose types are
pairwise distinct, plus an n-by-n matrix C, and forms the generators
f_j = sum_i C[i][j] * g_i.  The submodule these f_j generate under all
index permutations admits an exact lower bound on the size of ANY
generating set: the rank of C.  The certificate rests on the collapse
map, the per-type coefficient-sum vector of the degree-d part, which is
linear, invariant under index permutations, and kills every multiple
u*p with deg(u) >= 1 of a polynomial supported in degrees >= d.  Any
generating set must therefore produce the columns of C as linear
combinations of its own collapse vectors, forcing at least rank(C)
members.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .errors import NotEnoughTypesError
from .fields import Field
from .linalg import Matrix, span_rank
from .monomials import Partition, canonical_monomial, type_of
from .polynomials import Polynomial


def _iter_partitions(remaining, cap, prefix=()):
    if remaining == 0:
        yield Partition(prefix)
        return
    for part in range(min(remaining, cap), 0, -1):
        yield from _iter_partitions(remaining - part, part, prefix + (part,))


def partitions_of(d: int) -> list:
    """All partitions of d, descending lexicographic: (d) first, (1,..,1) last."""
    if d < 1:
        raise ValueError(f"degree must be positive, got {d}")
    return list(_iter_partitions(d, d))


def num_partitions(d: int) -> int:
    """The partition count p(d), by the pentagonal-number recurrence."""
    if d < 0:
        return 0
    table = [1] + [0] * d
    for m in range(1, d + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > m and g2 > m:
                break
            sign = -1 if k % 2 == 0 else 1
            if g1 <= m:
                total += sign * table[m - g1]
            if g2 <= m:
                total += sign * table[m - g2]
            k += 1
        table[m] = total
    return table[d]


def distinct_type_monomials(n: int, d: int) -> list:
    """The first n canonical monomials of degree d with pairwise distinct types.

    Only the leading n partitions are generated, so large degrees stay cheap
    as long as n is moderate.
    """
    if n < 1:
        raise ValueError(f"need at least one monomial, got n={n}")
    if d < 1:
        raise ValueError(f"degree must be positive, got {d}")
    if n > num_partitions(d):
        raise NotEnoughTypesError(
            f"n exceeds p(d) distinct types at degree d (n={n}, d={d}, "
            f"p({d})={num_partitions(d)})"
        )
    leading = itertools.islice(_iter_partitions(d, d), n)
    return [canonical_monomial(t) for t in leading]


@dataclass(frozen=True)
class Instance:
    """A generator family f_j = sum_i C[i][j] g_i over distinct-type monomials."""

    field: Field
    n: int
    d: int
    matrix: Matrix
    types: tuple
    monomials: tuple      # g_1..g_n, canonical monomials of the types
    generators: tuple     # f_1..f_n, homogeneous of degree d (or zero)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "field": self.field.selector,
            "matrix": str(self.matrix),
            "types": [list(t) for t in self.types],
            "generators_G": [str(g) for g in self.monomials],
            "generators_F": [str(f) for f in self.generators],
        }


def build_instance(matrix: Matrix, d: int) -> Instance:
    """Assemble the instance for a square coefficient matrix at degree d."""
    if matrix.nrows != matrix.ncols:
        raise ValueError(
            f"coefficient matrix must be square, got {matrix.nrows}x{matrix.ncols}"
        )
    n = matrix.nrows
    gens_g = distinct_type_monomials(n, d)
    types = tuple(type_of(g) for g in gens_g)
    field = matrix.field
    gens_f = []
    for j in range(n):
        f = Polynomial(field, {g: matrix.entry(i, j) for i, g in enumerate(gens_g)})
        gens_f.append(f)
    return Instance(
        field=field,
        n=n,
        d=d,
        matrix=matrix,
        types=types,
        monomials=tuple(gens_g),
        generators=tuple(gens_f),
    )


def random_matrix_of_rank(
    field: Field, n: int, r: int, seed: int, *, bound: int = 3, max_tries: int = 1000
) -> Matrix:
    """A seeded random n-by-n matrix of exact rank r over the field.

    Built as a product of n-by-r and r-by-n matrices with small integer
    entries, resampled until the product really has rank r (products can
    lose rank, especially over small prime fields).
    """
    if not 0 <= r <= n:
        raise ValueError(f"rank must satisfy 0 <= r <= n, got r={r}, n={n}")
    if r == 0:
        return Matrix.zeros(field, n, n)
    rng = random.Random(seed)
    for _ in range(max_tries):
        left = [[rng.randint(-bound, bound) for _ in range(r)] for _ in range(n)]
        right = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(r)]
        product = [
            [sum(left[i][k] * right[k][j] for k in range(r)) for j in range(n)]
            for i in range(n)
        ]
        candidate = Matrix(field, product)
        if candidate.rank() == r:
            return candidate
    raise RuntimeError(f"no rank-{r} sample found in {max_tries} tries (seed={seed})")


def collapse(p: Polynomial, types, d: int) -> tuple:
    """Per-type coefficient sums of the degree-d part of p.

    Component i sums the coefficients of all degree-d monomials of p whose
    type is types[i].  Linear in p; relabelling indices permutes the
    monomials within each type class and leaves every component fixed.
    """
    types = tuple(types)
    if len(set(types)) != len(types):
        raise ValueError("types must be pairwise distinct")
    if any(t.weight != d for t in types):
        raise ValueError(f"types must be partitions of d={d}")
    f = p.field
    position = {t: i for i, t in enumerate(types)}
    vector = [f.zero()] * len(types)
    for mono, coeff in p.terms():
        if mono.degree == d:
            i = position.get(type_of(mono))
            if i is not None:
                vector[i] = f.add(vector[i], coeff)
    return tuple(vector)


@dataclass(frozen=True)
class Certificate:
    """The rank lower bound on generating sets, with its witnessing vectors."""

    instance: Instance
    rank: int
    collapse_vectors: tuple  # j-th entry is collapse(f_j), a column of C
    verdict: str

    def to_json_dict(self) -> dict:
        f = self.instance.field
        doc = self.instance.to_json_dict()
        doc["rank"] = self.rank
        doc["collapse_vectors"] = [
            [f.format(x) for x in vec] for vec in self.collapse_vectors
        ]
        doc["verdict"] = self.verdict
        return doc


def lower_bound_certificate(instance: Instance) -> Certificate:
    """Certify that no generating set of the instance module beats rank(C).

    Recomputes the collapse vector of every f_j and checks it equals the
    matching column of C; a mismatch can only come from an arithmetic bug,
    so it aborts rather than certifying.
    """
    vectors = tuple(
        collapse(f, instance.types, instance.d) for f in instance.generators
    )
    for j, vec in enumerate(vectors):
        if vec != instance.matrix.column(j):
            raise RuntimeError(
                f"internal consistency failure: collapse(f_{j + 1}) != column "
                f"{j + 1} of the coefficient matrix; got {vec!r}"
            )
    r = instance.matrix.rank()
    spanned = span_rank(instance.field, vectors)
    if spanned != r:
        raise RuntimeError(
            f"internal consistency failure: collapse vectors span dimension "
            f"{spanned}, expected rank {r}"
        )
    verdict = (
        f"any generating set of this module over the infinite symmetric group "
        f"has at least {r} generators"
    )
    return Certificate(instance=instance, rank=r, collapse_vectors=vectors, verdict=verdict)


def candidate_lower_bound(candidates, instance: Instance) -> int:
    """Dimension of the span of the candidates' collapse vectors.

    If the candidates generate the instance module, their collapse vectors
    must span the column space of C, so this equals rank(C); a smaller
    value proves the candidate set cannot generate.
    """
    candidates = list(candidates)
    if not candidates:
        raise ValueError("need at least one candidate polynomial")
    vectors = [collapse(p, instance.types, instance.d) for p in candidates]
    return span_rank(instance.field, vectors)
