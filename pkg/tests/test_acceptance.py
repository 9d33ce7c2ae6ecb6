"""Acceptance suite: one test per criterion, one printed pass/fail line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines as the
criteria finish.  Every comparison is exact; the only tolerances are the
per-criterion wall-clock budgets, asserted where one is stated.
"""

import itertools
import json
import random
import time

import pytest

from symideal import (
    GF,
    Matrix,
    Monomial,
    Multiset,
    Partition,
    Polynomial,
    QQ,
    Truncation,
    build_instance,
    collapse,
    lower_bound_certificate,
    num_partitions,
    parse_permutation,
    parse_polynomial,
    partitions_of,
    random_matrix_of_rank,
    type_of,
    uv_factorization_check,
    verify_generation,
)
from symideal.cli import main as cli_main
from symideal.permutations import finite_witness
from oracles import minor_rank, random_permutation, random_polynomial

F7 = GF(7)


def _report(number: int, description: str, started: float, budget=None):
    elapsed = time.perf_counter() - started
    print(f"criterion {number}: PASS - {description} ({elapsed:.2f}s)")
    if budget is not None:
        assert elapsed < budget, (
            f"criterion {number} exceeded its {budget}s budget: {elapsed:.2f}s"
        )


def test_criterion_1_type_of_worked_example():
    started = time.perf_counter()
    assert type_of(Multiset.from_elements([1, 1, 1, 2, 3, 3])) == Partition((3, 2, 1))
    _report(1, "multiset {1,1,1,2,3,3} has type (3,2,1), bit-exact", started)


def test_criterion_2_identity_instances():
    started = time.perf_counter()
    for n, d in [(1, 1), (2, 2), (3, 3), (4, 4), (5, 5)]:
        cert = lower_bound_certificate(build_instance(Matrix.identity(QQ, n), d))
        assert cert.rank == n
    _report(2, "identity-matrix instances certify rank n for n = 1..5", started,
            budget=1.0)


def test_criterion_3_rank_certificates_match_minor_oracle():
    started = time.perf_counter()
    checked = 0
    for field in (QQ, F7):
        seed = 0
        for n in range(1, 5):
            degrees = [d for d in range(1, 6) if n <= num_partitions(d)]
            for r in range(0, n + 1):
                for _ in range(50):
                    seed += 1
                    mat = random_matrix_of_rank(field, n, r, seed)
                    oracle_rank = minor_rank(mat)
                    for d in degrees:
                        inst = build_instance(mat, d)
                        cert = lower_bound_certificate(inst)
                        assert cert.rank == oracle_rank == r
                        for j, vec in enumerate(cert.collapse_vectors):
                            assert vec == mat.column(j)
                        checked += 1
    _report(3, f"{checked} seeded certificates agree with minor enumeration "
               "over Q and GF(7)", started, budget=30.0)


def test_criterion_4_collapse_invariance_and_annihilation():
    started = time.perf_counter()
    rng = random.Random(2024)
    for _ in range(1000):
        d = rng.randint(1, 4)
        types = tuple(partitions_of(d))
        p = random_polynomial(rng, QQ, max_terms=6, max_index=5, max_exp=3)
        sigma = random_permutation(rng, 5)
        assert collapse(p.permuted(sigma), types, d) == collapse(p, types, d)
    zero_checked = 0
    while zero_checked < 500:
        d = rng.randint(1, 4)
        types = tuple(partitions_of(d))
        p = _random_homogeneous(rng, d)
        u = _random_multiplier(rng)
        vec = collapse(p.mono_shifted(u), types, d)
        assert all(x == QQ.zero() for x in vec)
        zero_checked += 1
    _report(4, "collapse is action-invariant (1000 cases) and kills shifted "
               "polynomials (500 cases)", started, budget=10.0)


def _random_homogeneous(rng, d, max_index=5, max_terms=4):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        k = rng.randint(1, min(d, 3))
        indices = sorted(rng.sample(range(1, max_index + 1), k))
        cuts = sorted(rng.sample(range(1, d), k - 1)) if k > 1 else []
        parts = [b - a for a, b in zip([0] + cuts, cuts + [d])]
        mono = Monomial(zip(indices, parts))
        terms[mono] = QQ.of(rng.randint(-5, 5))
    return Polynomial(QQ, terms)


def _random_multiplier(rng, max_index=6):
    k = rng.randint(1, 2)
    indices = rng.sample(range(1, max_index + 1), k)
    return Monomial({i: rng.randint(1, 2) for i in indices})


@pytest.fixture(scope="module")
def seeded_runs():
    """Twenty seeded instances with their full-candidate generation runs."""
    rng = random.Random(99)
    shapes = [(1, 1), (2, 2), (2, 3), (3, 3), (2, 3), (3, 3)]
    runs = []
    for count in range(20):
        n, d = shapes[count % len(shapes)]
        r = rng.randint(1, n)
        mat = random_matrix_of_rank(QQ, n, r, rng.randint(0, 10**6))
        inst = build_instance(mat, d)
        trunc = Truncation(d + 2, d)
        full = verify_generation(inst, list(inst.generators), trunc)
        runs.append((inst, trunc, full))
    return runs


def test_criterion_5_truncation_consistency(seeded_runs):
    started = time.perf_counter()
    subset_runs = 0
    for inst, trunc, full in seeded_runs:
        rank = inst.matrix.rank()
        generators = list(inst.generators)
        # proper subsets below the rank can never cover every generator
        for k in range(1, rank):
            for combo in itertools.combinations(range(inst.n), k):
                candidates = [generators[i] for i in combo]
                report = verify_generation(inst, candidates, trunc)
                statuses = [res.status for res in report.results]
                assert "not_in_truncation" in statuses
                assert report.candidate_bound <= k < rank
                assert report.consistent, "IMPOSSIBLE state reached"
                subset_runs += 1
        # the full candidate set succeeds with exactly re-substituting witnesses
        assert full.all_members
        assert full.consistent
        for res, f in zip(full.results, inst.generators):
            assert res.witness.substitute(generators) == f
    _report(5, f"20 seeded instances: {subset_runs} below-rank subsets all "
               "fail some generator, full sets all succeed", started, budget=300.0)


def test_criterion_6_uv_identity(seeded_runs):
    started = time.perf_counter()
    for inst, _, full in seeded_runs:
        witnesses = [res.witness for res in full.results]
        u_mat, v_mat, holds = uv_factorization_check(
            inst, list(inst.generators), witnesses
        )
        assert holds
        assert (u_mat * v_mat) == inst.matrix
    _report(6, "C = U*V holds exactly on all 20 successful runs", started)


def test_criterion_7_finite_witness_contract():
    started = time.perf_counter()
    rng = random.Random(4711)
    for _ in range(200):
        sigma = random_permutation(rng, 6)
        f = random_polynomial(rng, QQ, max_terms=5, max_index=6)
        bound, tau = finite_witness(sigma, f)
        assert tau.in_sn(bound)
        assert f.permuted(tau) == f.permuted(sigma)
    _report(7, "200 seeded witnesses stay inside S_N and reproduce the "
               "relabelling exactly", started, budget=5.0)


def test_criterion_8_cli_determinism_and_round_trip(capsys):
    started = time.perf_counter()
    assert cli_main(["demo", "--json", "--seed", "0"]) == 0
    first = capsys.readouterr().out
    assert cli_main(["demo", "--json", "--seed", "0"]) == 0
    second = capsys.readouterr().out
    assert first == second

    doc = json.loads(first)
    cert = doc["certificate"]
    matrix = Matrix.parse(cert["matrix"], QQ)
    assert str(matrix) == cert["matrix"]
    for text in cert["generators_G"] + cert["generators_F"]:
        assert str(parse_polynomial(text, QQ)) == text
    for vec in cert["collapse_vectors"]:
        for entry in vec:
            assert QQ.format(QQ.parse(entry)) == entry
    for report in doc["single_candidate_runs"] + [doc["full_candidate_run"]]:
        for item in report["per_generator"]:
            for term in item.get("witness", []):
                perm = parse_permutation(term["permutation"])
                assert str(perm) == term["permutation"]
                mono_poly = parse_polynomial(term["multiplier"], QQ)
                assert str(mono_poly) == term["multiplier"]
    _report(8, "demo --json is byte-identical across runs and all printed "
               "values re-parse", started)
