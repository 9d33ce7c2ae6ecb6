"""Command-line front end.

Commands: construct, certify, member, witness, demo.  Global flags
--field, --seed and --json may appear before or after the subcommand.
Exit codes: 0 success/member, 1 internal error, 2 usage or parse error,
3 target not in the requested truncation.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import NotEnoughTypesError, ParseError, TruncationError
from .fields import field_from_selector
from .instance import (
    build_instance,
    lower_bound_certificate,
    num_partitions,
    random_matrix_of_rank,
)
from .linalg import Matrix
from .oracle import Truncation, membership, verify_generation
from .permutations import finite_witness, parse_permutation
from .polynomials import parse_polynomial

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2
EXIT_NOT_IN_TRUNCATION = 3


def _add_common(parser, *, suppress=False):
    # the subcommand copies use SUPPRESS so their defaults never clobber
    # values already parsed from flags placed before the subcommand
    parser.add_argument(
        "--field",
        default=argparse.SUPPRESS if suppress else "q",
        help="coefficient field: q (rationals) or p=<prime>",
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=argparse.SUPPRESS if suppress else 0,
        help="seed for random matrices",
    )
    parser.add_argument(
        "--json",
        action="store_true",
        default=argparse.SUPPRESS if suppress else False,
        help="emit machine-readable JSON",
    )


def _add_instance_args(parser):
    parser.add_argument("-n", type=int, required=True, help="number of generators")
    parser.add_argument("-d", type=int, required=True, help="common degree")
    parser.add_argument("-C", "--matrix", help='coefficient matrix, e.g. "1,0;0,1"')
    parser.add_argument("--rank", type=int,
                        help="build a seeded random matrix of this rank instead")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symideal",
        description="Generator lower bounds for symmetric ideals in infinitely "
        "many variables, with brute-force truncation cross-checks.",
    )
    _add_common(parser)
    sub = parser.add_subparsers(dest="command", required=True)

    p_construct = sub.add_parser("construct", help="build and print an instance")
    _add_instance_args(p_construct)
    _add_common(p_construct, suppress=True)

    p_certify = sub.add_parser("certify", help="print the rank lower-bound certificate")
    _add_instance_args(p_certify)
    _add_common(p_certify, suppress=True)

    p_member = sub.add_parser("member", help="truncated module membership test")
    p_member.add_argument("-f", "--poly", required=True, help="target polynomial")
    p_member.add_argument("-g", "--gen", action="append", required=True,
                          help="generator polynomial (repeatable)")
    p_member.add_argument("-N", type=int, required=True, help="variable/group bound")
    p_member.add_argument("-D", type=int, required=True, help="total degree bound")
    _add_common(p_member, suppress=True)

    p_witness = sub.add_parser(
        "witness", help="bounded permutation agreeing with a map on a polynomial"
    )
    p_witness.add_argument("--sigma", required=True, help='cycle notation, e.g. "(1 2)"')
    p_witness.add_argument("-f", "--poly", required=True, help="polynomial")
    _add_common(p_witness, suppress=True)

    p_demo = sub.add_parser("demo", help="run the bundled end-to-end example")
    _add_common(p_demo, suppress=True)

    return parser


def _emit_json(doc) -> None:
    print(json.dumps(doc, indent=2, sort_keys=True))


def _resolve_matrix(args, field):
    if args.n < 1:
        raise ParseError(f"-n must be positive, got {args.n}")
    if args.d < 1:
        raise ParseError(f"-d must be positive, got {args.d}")
    if args.n > num_partitions(args.d):
        raise NotEnoughTypesError(
            f"n exceeds p(d) distinct types at degree d (n={args.n}, d={args.d})"
        )
    if args.matrix is not None and args.rank is not None:
        raise ParseError("give either -C or --rank, not both")
    if args.matrix is not None:
        matrix = Matrix.parse(args.matrix, field)
        if matrix.nrows != args.n or matrix.ncols != args.n:
            raise ParseError(
                f"matrix is {matrix.nrows}x{matrix.ncols}, expected {args.n}x{args.n}"
            )
        return matrix
    rank = args.rank if args.rank is not None else args.n
    if not 0 <= rank <= args.n:
        raise ParseError(f"--rank must be in 0..{args.n}, got {rank}")
    return random_matrix_of_rank(field, args.n, rank, args.seed)


def _print_instance_text(instance):
    print(f"n = {instance.n}, d = {instance.d}, field = {instance.field.selector}")
    print(f"C = {instance.matrix}")
    print("types: " + ", ".join(str(t) for t in instance.types))
    for i, g in enumerate(instance.monomials, start=1):
        print(f"g{i} = {g}")
    for j, f in enumerate(instance.generators, start=1):
        print(f"f{j} = {f}")


def cmd_construct(args, field) -> int:
    instance = build_instance(_resolve_matrix(args, field), args.d)
    if args.json:
        _emit_json(instance.to_json_dict())
    else:
        _print_instance_text(instance)
    return EXIT_OK


def cmd_certify(args, field) -> int:
    instance = build_instance(_resolve_matrix(args, field), args.d)
    certificate = lower_bound_certificate(instance)
    if args.json:
        _emit_json(certificate.to_json_dict())
    else:
        _print_instance_text(instance)
        print(f"rank = {certificate.rank}")
        print(f"verdict: {certificate.verdict}")
    return EXIT_OK


def cmd_member(args, field) -> int:
    target = parse_polynomial(args.poly, field)
    generators = [parse_polynomial(text, field) for text in args.gen]
    trunc = Truncation(num_vars=args.N, max_degree=args.D)
    witness = membership(target, generators, trunc)
    if witness is None:
        if args.json:
            _emit_json({"status": "not_in_truncation",
                        "params": {"N": args.N, "D": args.D}})
        else:
            print("not in truncation")
        return EXIT_NOT_IN_TRUNCATION
    if args.json:
        _emit_json({"status": "member", "params": {"N": args.N, "D": args.D},
                    "witness": witness.to_json_terms()})
    else:
        terms = witness.describe_terms(generators)
        print("member: " + (" + ".join(terms) if terms else "0"))
    return EXIT_OK


def cmd_witness(args, field) -> int:
    sigma = parse_permutation(args.sigma)
    poly = parse_polynomial(args.poly, field)
    bound, tau = finite_witness(sigma, poly)
    if args.json:
        _emit_json({"N": bound, "tau": str(tau)})
    else:
        print(f"N = {bound}, tau = {tau}")
    return EXIT_OK


def cmd_demo(args, field) -> int:
    instance = build_instance(Matrix.identity(field, 2), 2)
    certificate = lower_bound_certificate(instance)
    trunc = Truncation(num_vars=4, max_degree=2)
    f1, f2 = instance.generators
    single_runs = [
        verify_generation(instance, [f1], trunc),
        verify_generation(instance, [f2], trunc),
    ]
    full_run = verify_generation(instance, [f1, f2], trunc)
    for report in single_runs + [full_run]:
        if not report.consistent:
            raise RuntimeError("demo reached an inconsistent report")
    if not full_run.all_members:
        raise RuntimeError("demo full-candidate run failed membership")
    if args.json:
        _emit_json(
            {
                "certificate": certificate.to_json_dict(),
                "single_candidate_runs": [r.to_json_dict() for r in single_runs],
                "full_candidate_run": full_run.to_json_dict(),
            }
        )
        return EXIT_OK
    print("instance: identity coefficient matrix, n = 2, d = 2, "
          f"field = {field.selector}")
    _print_instance_text(instance)
    print(f"rank = {certificate.rank}")
    print(f"verdict: {certificate.verdict}")
    for label, report in zip(("[f1]", "[f2]"), single_runs):
        misses = [r.index for r in report.results if r.witness is None]
        print(
            f"candidates {label} at N={trunc.num_vars}, D={trunc.max_degree}: "
            f"collapse bound {report.candidate_bound} < rank "
            f"{report.instance_rank}; not_in_truncation for f{misses}"
        )
    print(
        f"candidates [f1, f2]: all generators are members; "
        f"collapse bound {full_run.candidate_bound} = rank {full_run.instance_rank}"
    )
    print("consistency: ok")
    return EXIT_OK


COMMANDS = {
    "construct": cmd_construct,
    "certify": cmd_certify,
    "member": cmd_member,
    "witness": cmd_witness,
    "demo": cmd_demo,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        field = field_from_selector(args.field)
        return COMMANDS[args.command](args, field)
    except NotEnoughTypesError:
        print("error: n exceeds p(d) distinct types at degree d", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, TruncationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001 - the CLI boundary reports and exits
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
