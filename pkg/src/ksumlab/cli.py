"""Command-line front end.

Subcommands mirror the pipeline stages: ksums, collide, expand,
eliminate, search.  All numeric output is exact rational text.  Exit
codes: 0 success/affirmative, 1 checked-and-negative, 2 usage or input
error.

Set arguments are literals like "1 -2 3/4 0^10"; an argument of the form
@path reads sets from a file instead, one set per line ('#' comments and
blank lines skipped), and expands to those sets in order.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from importlib import resources

from .algebra import Monomial, Poly, svar
from .elimination import (
    coefficient_report,
    quadratic_at,
    residual_equation_indices,
    residual_relations,
    second_root,
    solve_quadratic,
)
from .known import DOUBLE_ROOT_SET
from .multisets import (
    NumberMultiset,
    affine_image,
    format_multiset,
    ksums,
    parse_multiset,
    power_sum_vector,
)
from .search import SearchSpec, find_collisions
from .symfunc import (
    BadRangeError,
    e_expansion,
    load_identity_fixtures,
)

USAGE_ERROR = 2
NEGATIVE = 1
OK = 0


def _resolve_set_args(raw: list[str]) -> list[NumberMultiset]:
    """Expand literals and @file references into a flat list of sets."""
    out: list[NumberMultiset] = []
    for item in raw:
        if item.startswith("@"):
            with open(item[1:], "r", encoding="utf-8") as handle:
                for line in handle:
                    line = line.strip()
                    if line and not line.startswith("#"):
                        out.append(parse_multiset(line))
        else:
            out.append(parse_multiset(item))
    return out


def _shift_to_zero_s1(values: NumberMultiset) -> NumberMultiset:
    """Shift so S_1 = 0, with a notice on stderr when a shift was needed."""
    total = sum(values)
    if total:
        shift = -Fraction(total, len(values))
        print(f"note: input shifted by {shift} so that S_1 = 0", file=sys.stderr)
        return affine_image(values, Fraction(1), shift)
    return values


def cmd_ksums(args: argparse.Namespace) -> int:
    try:
        sets = _resolve_set_args([args.set])
        if len(sets) != 1:
            print("error: ksums expects exactly one set", file=sys.stderr)
            return USAGE_ERROR
        sums = ksums(sets[0], args.k)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    if args.json:
        payload = {
            "n": sums.source_n,
            "k": sums.source_k,
            "sums": [_json_number(v) for v in sums.sums],
        }
        print(json.dumps(payload))
    else:
        print(format_multiset(sums.sums))
    return OK


def cmd_collide(args: argparse.Namespace) -> int:
    try:
        raw = [args.first] if args.second is None else [args.first, args.second]
        sets = _resolve_set_args(raw)
        if len(sets) != 2:
            print("error: collide expects exactly two sets", file=sys.stderr)
            return USAGE_ERROR
        first, second = sets
        if len(first) != len(second):
            print("error: sets have different sizes", file=sys.stderr)
            return USAGE_ERROR
        sums_a = ksums(first, args.k)
        sums_b = ksums(second, args.k)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    if sums_a.sums == sums_b.sums:
        print(f"EQUAL ({len(sums_a.sums)} sums)")
        return OK
    for left, right in zip(sums_a.sums, sums_b.sums):
        if left != right:
            print(f"DIFFER: first differing sum {left} vs {right}")
            return NEGATIVE
    print("DIFFER: equal prefixes, different lengths")
    return NEGATIVE


def _fixture_polys() -> dict[int, Poly]:
    override = os.environ.get("KSUMLAB_FIXTURES")
    if override:
        with open(override, "r", encoding="utf-8") as handle:
            lines = handle.read().splitlines()
    else:
        text = resources.files("ksumlab").joinpath("fixtures/identities_k4_n12.txt").read_text()
        lines = text.splitlines()
    return load_identity_fixtures(lines)


def cmd_expand(args: argparse.Namespace) -> int:
    try:
        if args.p < 1:
            raise BadRangeError(f"p must be positive, got {args.p}")
        s1zero = args.s1_zero or args.check_fixtures
        poly = e_expansion(args.p, args.k, args.n, s1zero)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    if not args.check_fixtures:
        print(f"E{args.p} = {poly.render()}")
        return OK
    try:
        fixtures = _fixture_polys()
    except (OSError, ValueError) as exc:
        print(f"error: cannot load fixtures: {exc}", file=sys.stderr)
        return USAGE_ERROR
    if args.p not in fixtures:
        print(f"error: no fixture for p={args.p}", file=sys.stderr)
        return USAGE_ERROR
    expected = fixtures[args.p]
    # always report S_p itself: its vanishing (as in E_6) is the headline case
    pivot = Monomial({svar(args.p): 1})
    monomials = sorted({pivot} | set(poly.terms) | set(expected.terms), reverse=True)
    all_ok = True
    for mono in monomials:
        got, want = poly.coefficient(mono), expected.coefficient(mono)
        ok = got == want
        all_ok &= ok
        print(f"coef({mono}) = {got} [expected {want}] {'OK' if ok else 'MISMATCH'}")
    print(f"E{args.p}: {'all coefficients OK' if all_ok else 'coefficient MISMATCH'}")
    return OK if all_ok else NEGATIVE


def _prepared_power_sums(raw_set: str, upto: int):
    sets = _resolve_set_args([raw_set])
    if len(sets) != 1:
        raise ValueError("expected exactly one set")
    shifted = _shift_to_zero_s1(sets[0])
    if len(shifted) < upto:
        raise ValueError(f"set must have at least {upto} elements")
    return power_sum_vector(shifted, upto)


def cmd_eliminate(args: argparse.Namespace) -> int:
    if args.verify_coefficients:
        lines, all_ok = coefficient_report()
        for line in lines:
            print(line)
        print("quadratic coefficients: " + ("all OK" if all_ok else "MISMATCH"))
        return OK if all_ok else NEGATIVE

    if args.example1:
        from .symfunc import e_power_sums

        evalues = e_power_sums(DOUBLE_ROOT_SET, 4, 14)
        a, b, c = quadratic_at(evalues)
        roots = solve_quadratic(a, b, c)
        print("roots: " + ", ".join(str(r) for r in roots))
        return OK

    try:
        if args.second_root is not None:
            s = _prepared_power_sums(args.second_root, 8)
            if s[2] == 0:
                print("error: S_2 = 0, second root undefined", file=sys.stderr)
                return USAGE_ERROR
            print(f"S6'' = {second_root(s)}")
            return OK
        s = _prepared_power_sums(args.residuals, 12)
        if s[2] == 0:
            print("error: S_2 = 0, residuals undefined", file=sys.stderr)
            return USAGE_ERROR
        values = residual_relations(s)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    all_zero = True
    for index, value in zip(residual_equation_indices(), values):
        all_zero &= value == 0
        print(f"residual[{index}] = {value}")
    print("ALL ZERO" if all_zero else "NONZERO RESIDUALS")
    return OK if all_zero else NEGATIVE


def _json_number(value: Fraction):
    return int(value) if value.denominator == 1 else str(value)


def cmd_search(args: argparse.Namespace) -> int:
    try:
        spec = SearchSpec(
            n=args.n, k=args.k, bound=args.bound, symmetric_only=args.symmetric
        )
        records = find_collisions(spec, workers=args.workers, checkpoint=args.resume)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    sink = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        for record in records:
            line = json.dumps(
                {
                    "first": [_json_number(v) for v in record.first],
                    "second": [_json_number(v) for v in record.second],
                    "k": record.k,
                }
            )
            print(line, file=sink)
    finally:
        if sink is not sys.stdout:
            sink.close()
    print(f"{len(records)} collision record(s)", file=sys.stderr)
    return OK if records else NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ksumlab",
        description="Exact tools for reconstructing integer multisets from k-sums.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_ksums = sub.add_parser("ksums", help="print the sorted k-sum multiset")
    p_ksums.add_argument("set", help='set literal like "1 -2 0^3" or @file')
    p_ksums.add_argument("-k", type=int, required=True, help="sum arity")
    p_ksums.add_argument("--json", action="store_true", help="machine-readable output")
    p_ksums.set_defaults(func=cmd_ksums)

    p_collide = sub.add_parser("collide", help="compare the k-sum multisets of two sets")
    p_collide.add_argument("first", help="first set literal or @file")
    p_collide.add_argument(
        "second",
        nargs="?",
        help="second set literal or @file; omit when the first @file holds both",
    )
    p_collide.add_argument("-k", type=int, required=True, help="sum arity")
    p_collide.set_defaults(func=cmd_collide)

    p_expand = sub.add_parser(
        "expand", help="expand the p-th power sum of all k-sums in S-variables"
    )
    p_expand.add_argument("p", type=int, help="power sum index")
    p_expand.add_argument("-k", type=int, default=4, help="sum arity (default 4)")
    p_expand.add_argument("-n", type=int, default=12, help="set size (default 12)")
    p_expand.add_argument(
        "--s1-zero", action="store_true", help="specialize S_1 = 0 before printing"
    )
    p_expand.add_argument(
        "--check-fixtures",
        action="store_true",
        help="compare against the bundled reference identities (implies --s1-zero;"
        " KSUMLAB_FIXTURES overrides the fixture file)",
    )
    p_expand.set_defaults(func=cmd_expand)

    p_elim = sub.add_parser("eliminate", help="quadratic, second root and residual checks")
    group = p_elim.add_mutually_exclusive_group(required=True)
    group.add_argument(
        "--verify-coefficients",
        action="store_true",
        help="check the generated S_6 quadratic against reference coefficients",
    )
    group.add_argument(
        "--example1",
        action="store_true",
        help="roots of the quadratic for the set {-1, 0^10, 1}",
    )
    group.add_argument("--second-root", metavar="SET", help="print S_6'' for a set")
    group.add_argument(
        "--residuals", metavar="SET", help="print the exact compatibility residuals"
    )
    p_elim.set_defaults(func=cmd_eliminate)

    p_search = sub.add_parser("search", help="bounded exhaustive collision search")
    p_search.add_argument("-n", type=int, required=True, help="set size")
    p_search.add_argument("-k", type=int, required=True, help="sum arity")
    p_search.add_argument("-B", "--bound", type=int, required=True, help="value bound")
    p_search.add_argument(
        "--symmetric", action="store_true", help="negation-symmetric sets only"
    )
    p_search.add_argument("--workers", type=int, default=1, help="parallel workers")
    p_search.add_argument("--resume", metavar="FILE", help="checkpoint file")
    p_search.add_argument("--out", metavar="FILE", help="write records here instead of stdout")
    p_search.set_defaults(func=cmd_search)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
