"""Exact generator lower bounds for symmetric ideals in infinitely many variables.

Polynomials in x1, x2, x3, ... with exact coefficients carry an action of
the infinite symmetric group by index relabelling.  This package builds
families of invariant-module generators from a coefficient matrix and
distinct-type monomials, certifies that no generating set can be smaller
than the matrix rank (the collapse certificate), and cross-validates the
bound by brute-force membership at finite truncations.
"""

from .errors import NotEnoughTypesError, ParseError, TruncationError
from .fields import GF, QQ, Field, PrimeField, Rationals, field_from_selector
from .instance import (
    Certificate,
    Instance,
    build_instance,
    candidate_lower_bound,
    collapse,
    distinct_type_monomials,
    lower_bound_certificate,
    num_partitions,
    partitions_of,
    random_matrix_of_rank,
)
from .linalg import Matrix, backend_name, solve_exact, span_rank
from .monomials import (
    ONE,
    Monomial,
    Multiset,
    Partition,
    canonical_monomial,
    monomial_to_multiset,
    multiset_to_monomial,
    type_of,
)
from .oracle import (
    GenerationReport,
    MembershipResult,
    SpanElement,
    Truncation,
    Witness,
    constant_term,
    membership,
    monomials_of_type,
    orbit_truncated,
    spanning_set,
    uv_factorization_check,
    verify_generation,
)
from .permutations import (
    Permutation,
    compose,
    finite_witness,
    format_permutation,
    parse_permutation,
    symmetric_group,
)
from .polynomials import (
    Polynomial,
    format_polynomial,
    graded_part,
    parse_polynomial,
)

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "Field",
    "GF",
    "GenerationReport",
    "Instance",
    "Matrix",
    "MembershipResult",
    "Monomial",
    "Multiset",
    "NotEnoughTypesError",
    "ONE",
    "ParseError",
    "Partition",
    "Permutation",
    "Polynomial",
    "PrimeField",
    "QQ",
    "Rationals",
    "SpanElement",
    "Truncation",
    "TruncationError",
    "Witness",
    "backend_name",
    "build_instance",
    "candidate_lower_bound",
    "canonical_monomial",
    "collapse",
    "compose",
    "constant_term",
    "distinct_type_monomials",
    "field_from_selector",
    "finite_witness",
    "format_permutation",
    "format_polynomial",
    "graded_part",
    "lower_bound_certificate",
    "membership",
    "monomial_to_multiset",
    "monomials_of_type",
    "multiset_to_monomial",
    "num_partitions",
    "orbit_truncated",
    "parse_permutation",
    "parse_polynomial",
    "partitions_of",
    "random_matrix_of_rank",
    "solve_exact",
    "span_rank",
    "spanning_set",
    "symmetric_group",
    "type_of",
    "uv_factorization_check",
    "verify_generation",
]
