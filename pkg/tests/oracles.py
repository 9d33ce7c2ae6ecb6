"""Independent reference computations used by the tests.

Everything here deliberately avoids the library's elimination and orbit
code paths: determinants come from the Leibniz sum, ranks from minor
enumeration, orbits from walking every group element.  Slow but direct.
"""

import itertools
import random
from fractions import Fraction

from symideal import Monomial, Permutation, Polynomial


def perm_sign(perm) -> int:
    """Sign of a permutation of range(k), by inversion count."""
    inversions = sum(
        1
        for a, b in itertools.combinations(range(len(perm)), 2)
        if perm[a] > perm[b]
    )
    return -1 if inversions % 2 else 1


def leibniz_det(field, rows):
    """Determinant as the signed sum over all permutations."""
    k = len(rows)
    total = field.zero()
    for perm in itertools.permutations(range(k)):
        prod = field.one()
        for i, j in enumerate(perm):
            prod = field.mul(prod, rows[i][j])
        total = field.add(total, prod if perm_sign(perm) > 0 else field.neg(prod))
    return total


def minor_rank(matrix) -> int:
    """Largest k with a nonzero k-by-k minor (0 for the zero matrix)."""
    field = matrix.field
    for k in range(min(matrix.nrows, matrix.ncols), 0, -1):
        for rows in itertools.combinations(range(matrix.nrows), k):
            for cols in itertools.combinations(range(matrix.ncols), k):
                sub = [[matrix.entry(i, j) for j in cols] for i in rows]
                if leibniz_det(field, sub) != field.zero():
                    return k
    return 0


def brute_force_orbit(mono: Monomial, n_bound: int) -> set:
    """Orbit by applying every one of the n! permutations."""
    points = range(1, n_bound + 1)
    out = set()
    for image in itertools.permutations(points):
        sigma = Permutation(zip(points, image))
        out.add(mono.permuted(sigma))
    return out


def brute_force_partitions(d: int) -> set:
    """All weakly decreasing positive tuples summing to d, by filtering."""
    out = set()

    def walk(prefix, remaining):
        if remaining == 0:
            out.add(prefix)
            return
        start = prefix[-1] if prefix else remaining
        for part in range(1, min(start, remaining) + 1):
            walk(prefix + (part,), remaining - part)

    walk((), d)
    return out


def random_monomial(rng: random.Random, max_index=5, max_exp=3, max_vars=3) -> Monomial:
    k = rng.randint(0, max_vars)
    indices = rng.sample(range(1, max_index + 1), k)
    return Monomial({i: rng.randint(1, max_exp) for i in indices})


def random_polynomial(rng, field, max_terms=6, max_index=5, max_exp=3, max_vars=3):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        mono = random_monomial(rng, max_index, max_exp, max_vars)
        coeff = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        terms[mono] = field.of(coeff)
    return Polynomial(field, terms)


def random_permutation(rng: random.Random, n: int) -> Permutation:
    image = list(range(1, n + 1))
    rng.shuffle(image)
    return Permutation(zip(range(1, n + 1), image))
