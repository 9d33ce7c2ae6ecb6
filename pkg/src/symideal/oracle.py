"""Brute-force cross-validation at finite truncations.

Restricting to variables x1..xN, permutations of {1..N}, and total degree
at most D turns membership in a permutation-invariant submodule into a
finite exact linear-algebra problem: a polynomial f lies in the truncated
module of p_1..p_k iff it is a K-linear combination of the products
u * sigma(p_l) over multiplier monomials u and permutations sigma.  A
successful solve yields an explicit combination witness; failure only
means "not in THIS truncation", never "not in the module", since larger
N or D may still succeed.

The factorization check ties the truncated witnesses back to the rank
certificate: writing U for the matrix of candidate collapse vectors and V
for the matrix of constant witness coefficients, any witness set for the
f_j must satisfy C = U * V exactly, which caps rank(C) by the number of
candidates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import TruncationError
from .fields import Field
from .instance import Instance, candidate_lower_bound, collapse
from .linalg import Matrix, solve_exact
from .monomials import ONE, Monomial, Partition, canonical_monomial
from .permutations import Permutation
from .polynomials import Polynomial

MAX_GROUP_BOUND = 8  # |S_8| = 40320; factorial growth beyond is pointless


@dataclass(frozen=True)
class Truncation:
    """Bounds of one finite slice: variables/permutations 1..num_vars,
    total degree <= max_degree."""

    num_vars: int
    max_degree: int

    def __post_init__(self):
        if not 1 <= self.num_vars <= MAX_GROUP_BOUND:
            raise ValueError(
                f"variable bound must be in 1..{MAX_GROUP_BOUND}, got {self.num_vars}"
            )
        if self.max_degree < 0:
            raise ValueError(f"degree bound must be nonnegative, got {self.max_degree}")


def _check_indices(m: Monomial, n_bound: int):
    items = m.items()
    if items and items[-1][0] > n_bound:
        raise TruncationError(
            f"monomial {m} uses index {items[-1][0]} beyond the bound {n_bound}"
        )


def _extend_to_permutation(mapping: dict, n_bound: int) -> Permutation:
    """Complete an injection inside {1..n} to a permutation of {1..n},
    pairing leftover domain and image points in increasing order."""
    used_dom = set(mapping)
    used_img = set(mapping.values())
    free_dom = [i for i in range(1, n_bound + 1) if i not in used_dom]
    free_img = [j for j in range(1, n_bound + 1) if j not in used_img]
    full = dict(mapping)
    full.update(zip(free_dom, free_img))
    return Permutation(full)


def orbit_truncated(m: Monomial, n_bound: int) -> set:
    """All images of m under permutations of {1..n_bound}.

    The orbit is enumerated through injections of the indices of m into
    {1..n_bound}; every permutation acts through such an injection, so
    this is the full orbit without walking all n! group elements.
    """
    _check_indices(m, n_bound)
    exponents = tuple(e for _, e in m.items())
    k = len(exponents)
    return {
        Monomial(zip(targets, exponents))
        for targets in itertools.permutations(range(1, n_bound + 1), k)
    }


def monomials_of_type(shape: Partition, n_bound: int) -> set:
    """All monomials with indices <= n_bound of the given type."""
    if len(shape) > n_bound:
        raise TruncationError(
            f"type {shape} needs {len(shape)} distinct indices, bound is {n_bound}"
        )
    return orbit_truncated(canonical_monomial(shape), n_bound)


def _monomials_up_to_degree(n_vars: int, max_deg: int) -> list:
    """Monomials on x1..x{n_vars} of degree <= max_deg, graded order."""
    out = [ONE]
    for deg in range(1, max_deg + 1):
        layer = []
        for combo in itertools.combinations_with_replacement(range(1, n_vars + 1), deg):
            counts = {}
            for i in combo:
                counts[i] = counts.get(i, 0) + 1
            layer.append(Monomial(counts))
        layer.sort(key=Monomial.sort_key)
        out.extend(layer)
    return out


@dataclass(frozen=True)
class SpanElement:
    """One labelled product u * sigma(p_l) of the truncated module."""

    gen_index: int        # 0-based position of p_l in the candidate list
    multiplier: Monomial  # u
    perm: Permutation     # sigma, support inside {1..N}
    product: Polynomial


def _perm_images(p: Polynomial, n_bound: int):
    """Distinct images sigma(p) with one representative sigma each,
    enumerated deterministically."""
    indices = sorted({i for mono, _ in p.terms() for i in mono.indices()})
    if not indices:
        yield Permutation.identity(), p
        return
    seen = set()
    for targets in itertools.permutations(range(1, n_bound + 1), len(indices)):
        sigma = _extend_to_permutation(dict(zip(indices, targets)), n_bound)
        image = p.permuted(sigma)
        if image not in seen:
            seen.add(image)
            yield sigma, image


def _spanning_elements(generators, trunc: Truncation) -> list:
    """Labelled, deduplicated spanning products of the truncated module."""
    elements = []
    seen = {}
    for l, p in enumerate(generators):
        if p.max_index() > trunc.num_vars:
            raise TruncationError(
                f"generator {l + 1} uses indices beyond x{trunc.num_vars}"
            )
        deg = p.degree
        if deg is None:
            continue  # zero generator spans nothing
        if deg > trunc.max_degree:
            raise TruncationError(
                f"generator {l + 1} has degree {deg} beyond the bound "
                f"{trunc.max_degree}"
            )
        multipliers = _monomials_up_to_degree(trunc.num_vars, trunc.max_degree - deg)
        for sigma, image in _perm_images(p, trunc.num_vars):
            for u in multipliers:
                product = image.mono_shifted(u)
                if product in seen:
                    continue
                seen[product] = True
                elements.append(
                    SpanElement(gen_index=l, multiplier=u, perm=sigma, product=product)
                )
    return elements


def spanning_set(generators, trunc: Truncation) -> list:
    """The deduplicated products u * sigma(p); their span is the truncation."""
    return [e.product for e in _spanning_elements(generators, trunc)]


class Witness:
    """An explicit combination f = sum coeff * u * sigma(p_l).

    Checked against its target on construction: a witness that does not
    re-substitute exactly is never created.
    """

    __slots__ = ("field", "terms")

    def __init__(self, field: Field, terms, generators=None, target=None):
        normalized = []
        for gen_index, multiplier, perm, coeff in terms:
            coeff = field.of(coeff)
            if coeff != field.zero():
                normalized.append((int(gen_index), multiplier, perm, coeff))
        normalized.sort(key=lambda t: (t[0], t[1].sort_key(), str(t[2])))
        self.field = field
        self.terms = tuple(normalized)
        if generators is not None and target is not None:
            resubstituted = self.substitute(generators)
            if resubstituted != target:
                raise RuntimeError(
                    "internal consistency failure: witness re-substitution "
                    f"gives {resubstituted}, expected {target}"
                )

    def substitute(self, generators) -> Polynomial:
        """Evaluate the combination against the candidate list."""
        total = Polynomial.zero(self.field)
        for gen_index, multiplier, perm, coeff in self.terms:
            part = generators[gen_index].permuted(perm).mono_shifted(multiplier)
            total = total + part.scaled(coeff)
        return total

    def constant_coefficient_sum(self, gen_index: int):
        """Sum of coefficients with multiplier 1 for one candidate: the
        constant-term weight this witness puts on sigma-images of p_l."""
        f = self.field
        acc = f.zero()
        for l, multiplier, _, coeff in self.terms:
            if l == gen_index and multiplier.is_one():
                acc = f.add(acc, coeff)
        return acc

    def __eq__(self, other):
        if not isinstance(other, Witness):
            return NotImplemented
        return self.field == other.field and self.terms == other.terms

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(self.describe_terms())

    def describe_terms(self, generators=None):
        """Human-readable term texts like ``(1 2)·x1^2``."""
        out = []
        f = self.field
        for gen_index, multiplier, perm, coeff in self.terms:
            prefix = ""
            if coeff != f.one():
                prefix += f"{f.format(coeff)} * "
            if not multiplier.is_one():
                prefix += f"{multiplier} * "
            target = (
                str(generators[gen_index]) if generators is not None
                else f"g{gen_index + 1}"
            )
            out.append(f"{prefix}{perm}·{target}")
        return out

    def to_json_terms(self) -> list:
        f = self.field
        return [
            {
                "generator": gen_index + 1,
                "multiplier": str(multiplier),
                "permutation": str(perm),
                "coefficient": f.format(coeff),
            }
            for gen_index, multiplier, perm, coeff in self.terms
        ]


def membership(f: Polynomial, generators, trunc: Truncation):
    """Solve f against the truncated module span; Witness or None.

    None means f is not in THIS truncation; membership at larger bounds,
    or over the full infinite-variable module, is not excluded.
    """
    if f.max_index() > trunc.num_vars:
        raise TruncationError(f"target uses indices beyond x{trunc.num_vars}")
    deg = f.degree
    if deg is not None and deg > trunc.max_degree:
        raise TruncationError(
            f"target has degree {deg} beyond the bound {trunc.max_degree}"
        )
    field = f.field
    elements = _spanning_elements(generators, trunc)
    if f.is_zero():
        return Witness(field, ())
    if not elements:
        return None
    support = {m for e in elements for m in e.product.monomials()}
    support.update(f.monomials())
    row_monomials = sorted(support, key=Monomial.sort_key)
    rows = []
    for mono in row_monomials:
        rows.append([e.product.coefficient(mono) for e in elements])
    rhs = [f.coefficient(mono) for mono in row_monomials]
    solution = solve_exact(Matrix(field, rows), rhs)
    if solution is None:
        return None
    terms = [
        (e.gen_index, e.multiplier, e.perm, x)
        for e, x in zip(elements, solution)
        if x != field.zero()
    ]
    return Witness(field, terms, generators=generators, target=f)


def constant_term(p: Polynomial):
    """Coefficient of the monomial 1 (zero if absent)."""
    return p.coefficient(ONE)


@dataclass(frozen=True)
class MembershipResult:
    """Outcome for one target generator f_j."""

    index: int            # 1-based j
    witness: object       # Witness or None

    @property
    def status(self) -> str:
        return "member" if self.witness is not None else "not_in_truncation"


@dataclass(frozen=True)
class GenerationReport:
    """Per-generator truncated membership plus the collapse lower bound.

    consistent is False exactly in the impossible state: every f_j proved
    a member while the candidates' collapse span is smaller than rank(C).
    The rank certificate shows that state cannot occur for sound
    arithmetic, so an inconsistent report indicates a bug, not mathematics.
    """

    truncation: Truncation
    results: tuple
    candidate_bound: int
    instance_rank: int

    @property
    def all_members(self) -> bool:
        return all(r.witness is not None for r in self.results)

    @property
    def consistent(self) -> bool:
        return not (self.all_members and self.candidate_bound < self.instance_rank)

    def to_json_dict(self) -> dict:
        per_generator = []
        for r in self.results:
            entry = {"j": r.index, "status": r.status}
            if r.witness is not None:
                entry["witness"] = r.witness.to_json_terms()
            per_generator.append(entry)
        return {
            "params": {"N": self.truncation.num_vars, "D": self.truncation.max_degree},
            "per_generator": per_generator,
            "candidate_lower_bound": self.candidate_bound,
            "instance_rank": self.instance_rank,
            "consistent": self.consistent,
        }


def verify_generation(instance: Instance, candidates, trunc: Truncation) -> GenerationReport:
    """Test every instance generator against the candidates' truncation."""
    candidates = list(candidates)
    results = []
    for j, f in enumerate(instance.generators, start=1):
        results.append(MembershipResult(index=j, witness=membership(f, candidates, trunc)))
    return GenerationReport(
        truncation=trunc,
        results=tuple(results),
        candidate_bound=candidate_lower_bound(candidates, instance),
        instance_rank=instance.matrix.rank(),
    )


def uv_factorization_check(instance: Instance, candidates, witnesses):
    """Rebuild C as (collapse matrix) * (constant witness weights).

    Returns (U, V, holds): U has the candidates' collapse vectors as
    columns, V collects each witness's constant multiplier coefficients,
    and holds reports whether U * V equals C exactly.  For candidates
    inside the module this identity always holds; False means a bug.
    """
    candidates = list(candidates)
    witnesses = list(witnesses)
    if not candidates:
        raise ValueError("need at least one candidate")
    if len(witnesses) != instance.n:
        raise ValueError(
            f"need one witness per generator: {instance.n} generators, "
            f"{len(witnesses)} witnesses"
        )
    if any(w is None for w in witnesses):
        raise ValueError("all generators must have succeeded for the check")
    field = instance.field
    collapse_columns = [collapse(p, instance.types, instance.d) for p in candidates]
    u_matrix = Matrix.from_columns(field, collapse_columns)
    v_rows = [
        [w.constant_coefficient_sum(l) for w in witnesses]
        for l in range(len(candidates))
    ]
    v_matrix = Matrix(field, v_rows)
    holds = (u_matrix * v_matrix) == instance.matrix
    return u_matrix, v_matrix, holds
