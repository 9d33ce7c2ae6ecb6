#!/usr/bin/env python3
"""Benchmark the compiled elimination kernels against the pure-Python twin.

Times the three kernel entry points on seeded random inputs and, as an
end-to-end probe, a truncated membership solve routed through whichever
backend symideal.linalg selected.  Run after building the extension:

    python benchmarks/bench_linalg.py
"""

import random
import time

from symideal import _kernels_py

try:
    from symideal import _kernels as _kernels_cy
except ImportError:
    _kernels_cy = None


def _random_rows(rng, nrows, ncols, bound):
    return [[rng.randint(-bound, bound) for _ in range(ncols)] for _ in range(nrows)]


def _time(fn, *args, repeats=3):
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def bench_kernels():
    rng = random.Random(12345)
    p = 1000003
    cases = [
        ("rank_mod_p 200x200", "rank_mod_p", _random_rows(rng, 200, 200, 10**6), p),
        ("rref_mod_p 150x160", "rref_mod_p", _random_rows(rng, 150, 160, 10**6), p),
        ("bareiss_rank 60x60", "bareiss_rank", _random_rows(rng, 60, 60, 9), None),
    ]
    print(f"{'kernel':<22} {'pure':>10} {'compiled':>10} {'speedup':>9}")
    for label, name, rows, modulus in cases:
        args = (rows, modulus) if modulus is not None else (rows,)
        pure_time, pure_result = _time(getattr(_kernels_py, name), *args)
        if _kernels_cy is None:
            print(f"{label:<22} {pure_time * 1e3:>8.1f}ms {'n/a':>10} {'n/a':>9}")
            continue
        cy_time, cy_result = _time(getattr(_kernels_cy, name), *args)
        if name == "rref_mod_p":
            assert pure_result[1] == cy_result[1]
            assert [list(r) for r in pure_result[0]] == [list(r) for r in cy_result[0]]
        else:
            assert pure_result == cy_result
        print(
            f"{label:<22} {pure_time * 1e3:>8.1f}ms {cy_time * 1e3:>8.1f}ms "
            f"{pure_time / cy_time:>8.1f}x"
        )


def bench_membership():
    from symideal import GF, Truncation, backend_name, build_instance, membership
    from symideal.instance import random_matrix_of_rank

    field = GF(7)
    inst = build_instance(random_matrix_of_rank(field, 3, 3, 0), 3)
    trunc = Truncation(6, 3)
    t0 = time.perf_counter()
    for f in inst.generators:
        witness = membership(f, list(inst.generators), trunc)
        assert witness is not None
    elapsed = time.perf_counter() - t0
    print(
        f"\nmembership n=3 d=3 over GF(7) at N=6, D=3 "
        f"[{backend_name()} backend]: {elapsed * 1e3:.1f}ms"
    )


if __name__ == "__main__":
    if _kernels_cy is None:
        print("compiled kernels not built; timing the pure backend only\n")
    bench_kernels()
    bench_membership()
