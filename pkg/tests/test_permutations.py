"""Finite-support permutations, their action, and the bounded-witness map."""

import random

import pytest

from symideal import (
    Monomial,
    ParseError,
    Permutation,
    QQ,
    compose,
    finite_witness,
    format_permutation,
    parse_permutation,
    parse_polynomial,
    symmetric_group,
    type_of,
)
from oracles import random_monomial, random_permutation, random_polynomial


def test_parse_and_format_cycles():
    sigma = parse_permutation("(1 2)(3 5 4)")
    assert sigma(1) == 2 and sigma(2) == 1
    assert sigma(3) == 5 and sigma(5) == 4 and sigma(4) == 3
    assert sigma(9) == 9
    assert format_permutation(sigma) == "(1 2)(3 5 4)"
    assert parse_permutation(str(sigma)) == sigma


def test_parse_identity():
    assert parse_permutation("()") == Permutation.identity()
    assert str(Permutation.identity()) == "()"


def test_parse_rejects_bad_input():
    for text in ["", "1 2", "(1 2", "(1 2)(2 3)", "(1 1)", "(a b)", "(1 2) extra"]:
        with pytest.raises(ParseError):
            parse_permutation(text)


def test_constructor_validates_bijection():
    with pytest.raises(ValueError):
        Permutation({1: 2})  # 2 never maps back
    with pytest.raises(ValueError):
        Permutation({1: 3, 2: 3, 3: 1})
    with pytest.raises(ValueError):
        Permutation({0: 1, 1: 0})
    assert Permutation({1: 1, 5: 5}).is_identity()


def test_group_laws_small():
    swap = parse_permutation("(1 2)")
    assert swap * swap == Permutation.identity()
    assert Permutation.identity().inverse() == Permutation.identity()
    assert compose(swap, swap.inverse()) == Permutation.identity()


def test_compose_matches_action_composition():
    rng = random.Random(17)
    for _ in range(300):
        sigma = random_permutation(rng, 7)
        tau = random_permutation(rng, 7)
        mono = random_monomial(rng, max_index=7)
        assert mono.permuted(compose(sigma, tau)) == mono.permuted(tau).permuted(sigma)
        assert mono.permuted(sigma * sigma.inverse()) == mono


def test_action_relabels_exponents():
    sigma = parse_permutation("(1 2)")
    assert Monomial({1: 2, 2: 1}).permuted(sigma) == Monomial({1: 1, 2: 2})
    p = parse_polynomial("x1^2*x2 + 3*x4", QQ)
    assert p.permuted(sigma) == parse_polynomial("x1*x2^2 + 3*x4", QQ)
    assert p.permuted(Permutation.identity()) == p


def test_action_preserves_type_and_degree():
    rng = random.Random(29)
    for _ in range(1000):
        sigma = random_permutation(rng, 8)
        mono = random_monomial(rng, max_index=8, max_vars=4)
        image = mono.permuted(sigma)
        assert type_of(image) == type_of(mono)
        assert image.degree == mono.degree


def test_orbit_characterization_sorting_permutation():
    # every monomial is carried onto the canonical representative of its
    # type by the explicit sorting relabelling, so same type <=> same orbit
    from symideal import canonical_monomial

    rng = random.Random(31)
    for _ in range(200):
        mono = random_monomial(rng, max_index=6, max_vars=4)
        src = [i for i, _ in sorted(mono.items(), key=lambda t: (-t[1], t[0]))]
        mapping = {i: k for k, i in enumerate(src, start=1)}
        sorted_image = mono.permuted(lambda i: mapping.get(i, i))
        assert sorted_image == canonical_monomial(type_of(mono))


def test_symmetric_group_enumeration():
    s3 = list(symmetric_group(3))
    assert len(s3) == 6
    assert len(set(s3)) == 6
    assert all(sigma.in_sn(3) for sigma in s3)
    assert len(list(symmetric_group(1))) == 1
    assert len(set(symmetric_group(4))) == 24


def test_finite_witness_swap():
    f = parse_polynomial("x1 + x2", QQ)
    bound, tau = finite_witness(parse_permutation("(1 2)"), f)
    assert bound == 2
    assert tau == parse_permutation("(1 2)")
    assert f.permuted(tau) == f


def test_finite_witness_identity_and_constant():
    f = parse_polynomial("5", QQ)
    bound, tau = finite_witness(parse_permutation("()"), f)
    assert bound == 1 and tau.is_identity()
    # identity on any polynomial: the bound collapses to 1
    g = parse_polynomial("x3 + 2*x7", QQ)
    bound, tau = finite_witness(Permutation.identity(), g)
    assert bound == 1 and tau.is_identity()
    # a permutation fixing all indices of f behaves like the identity on f
    bound, tau = finite_witness(parse_permutation("(8 9)"), g)
    assert bound == 1 and tau.is_identity()


def test_finite_witness_shift_like_map():
    f = parse_polynomial("x1", QQ)
    bound, tau = finite_witness(lambda i: 5 if i == 1 else i, f)
    assert bound == 5
    assert tau(1) == 5
    assert tau.in_sn(5)
    assert f.permuted(tau) == parse_polynomial("x5", QQ)


def test_finite_witness_infinite_support_callable():
    f = parse_polynomial("x1 + 2*x3", QQ)
    shift = lambda i: i + 1  # no finite support at all
    bound, tau = finite_witness(shift, f)
    assert bound == 4
    assert f.permuted(tau) == parse_polynomial("x2 + 2*x4", QQ)
    assert tau.in_sn(bound)


def test_finite_witness_rejects_collisions():
    f = parse_polynomial("x1 + x2", QQ)
    with pytest.raises(ValueError):
        finite_witness(lambda i: 1, f)


def test_finite_witness_contract_seeded():
    rng = random.Random(41)
    for _ in range(200):
        sigma = random_permutation(rng, 6)
        f = random_polynomial(rng, QQ, max_terms=5, max_index=6)
        bound, tau = finite_witness(sigma, f)
        assert tau.in_sn(bound)
        assert f.permuted(tau) == f.permuted(sigma)
