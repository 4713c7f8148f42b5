"""Command-line interface.

Subcommands: verify, construct, decide, primitive, enumerate,
conjecture, fulldiv.  Exit codes: 0 the answer is yes/true, 1 the answer
is no/false, 2 input error, 3 resource bound (sieve too large), 4 search
budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cache import DecisionCache
from .catalog import enumerate_primitive, full_divisor_set_check
from .construct import (
    ExponentPlan,
    PlanPreconditionError,
    build_cover,
    greedy_exponents,
    primitive_plan,
)
from .decide import SearchBudget, decide_covering, is_primitive_covering
from .systems import CoverSystem, SieveBoundExceeded, verify_cover
from .search import BudgetExceeded

DEFAULT_CACHE = ".covernum_cache.jsonl"

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3
EXIT_BUDGET = 4


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="covernum",
        description="Exact computations with covers of the integers by residue classes.",
    )
    parser.add_argument("--format", choices=("json", "text"), default="text")
    parser.add_argument("--output", help="write the report here instead of stdout")
    parser.add_argument("--max-nodes", type=int, default=10**8,
                        help="search node budget per decision")
    parser.add_argument("--max-seconds", type=float, default=60.0,
                        help="wall-clock budget per decision")
    parser.add_argument("--cache", default=DEFAULT_CACHE,
                        help="decision cache path (JSON lines)")
    parser.add_argument("--no-cache", action="store_true",
                        help="do not read or write the decision cache")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="verify a cover file")
    p.add_argument("cover_file")

    p = sub.add_parser("construct", help="build an explicit cover from a plan")
    p.add_argument("--primes", type=_int_list,
                   help="comma-separated primes of the plan")
    p.add_argument("--exponents", type=_int_list,
                   help="comma-separated exponents matching --primes")
    p.add_argument("--greedy", type=_int_list, metavar="PRIMES",
                   help="smallest exponents making these primes a covering plan")
    p.add_argument("--primitive-plan", type=_int_list, metavar="PRIMES",
                   dest="primitive_primes",
                   help="plan whose value is a primitive covering number")

    for name, help_text in (
        ("decide", "is n a covering number?"),
        ("primitive", "is n a primitive covering number?"),
        ("fulldiv", "must every minimal cover inside D_n use all of D_n?"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("n", type=int)

    for name, help_text in (
        ("enumerate", "catalog all primitive covering numbers up to a bound"),
        ("conjecture", "check the prime-ordering conjecture up to a bound"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("bound", type=int)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        budget = SearchBudget(args.max_nodes, args.max_seconds)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    cache = None if args.no_cache else DecisionCache(args.cache)
    try:
        return _dispatch(args, budget, cache)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except SieveBoundExceeded as exc:
        print(f"resource bound: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def _emit(args, text: str) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _dispatch(args, budget, cache) -> int:
    if args.command == "verify":
        return _cmd_verify(args)
    if args.command == "construct":
        return _cmd_construct(args)
    if args.command == "decide":
        return _cmd_decide(args, budget, cache)
    if args.command == "primitive":
        ok = is_primitive_covering(args.n, budget, cache)
        _emit(args, json.dumps({"n": args.n, "primitive": ok},
                               separators=(",", ":"))
              if args.format == "json"
              else f"n={args.n}: {'primitive covering number' if ok else 'not a primitive covering number'}")
        return EXIT_TRUE if ok else EXIT_FALSE
    if args.command == "enumerate":
        catalog = enumerate_primitive(args.bound, budget, cache)
        if args.format == "json":
            _emit(args, catalog.to_json())
        else:
            lines = [f"primitive covering numbers <= {args.bound}: "
                     f"{catalog.values()}"]
            lines += [f"  {e.n} = {e.factorization}  cover with "
                      f"{e.certificate.k} classes" for e in catalog.entries]
            _emit(args, "\n".join(lines))
        return EXIT_TRUE
    if args.command == "conjecture":
        catalog = enumerate_primitive(args.bound, budget, cache)
        missing = [e.n for e in catalog.entries if e.ordering is None]
        if args.format == "json":
            _emit(args, json.dumps(
                {"bound": args.bound, "checked": catalog.values(),
                 "counterexamples": missing}, separators=(",", ":")))
        elif missing:
            _emit(args, f"COUNTEREXAMPLES (no admissible prime ordering): {missing}")
        else:
            _emit(args, f"all {len(catalog.entries)} primitive covering "
                        f"numbers <= {args.bound} admit an ordering")
        return EXIT_FALSE if missing else EXIT_TRUE
    if args.command == "fulldiv":
        ok = full_divisor_set_check(args.n, budget)
        _emit(args, json.dumps({"n": args.n, "full_divisor_set": ok},
                               separators=(",", ":"))
              if args.format == "json"
              else f"n={args.n}: every minimal cover inside D_n uses all of D_n: {'yes' if ok else 'no'}")
        return EXIT_TRUE if ok else EXIT_FALSE
    raise AssertionError(args.command)


def _cmd_decide(args, budget, cache) -> int:
    rec = decide_covering(args.n, budget, cache)
    if args.format == "json":
        _emit(args, json.dumps(
            {"n": rec.n, "covering": rec.is_covering,
             "certificate": None if rec.certificate is None
             else rec.certificate.to_dict(),
             "rejection": rec.rejection}, separators=(",", ":")))
    elif rec.is_covering:
        _emit(args, f"n={rec.n}: covering number, certificate "
                    f"{rec.certificate}")
    else:
        _emit(args, f"n={rec.n}: not a covering number ({rec.rejection})")
    return EXIT_TRUE if rec.is_covering else EXIT_FALSE


def _cmd_verify(args) -> int:
    with open(args.cover_file, encoding="utf-8") as fh:
        system = CoverSystem.from_json(fh.read())
    report = verify_cover(system)
    if args.format == "json":
        _emit(args, json.dumps(
            {"cover": report.is_cover, "witness": report.witness,
             "minimal": report.is_cover and report.is_minimal,
             "redundant_indices": list(report.redundant_indices),
             "modulus": system.modulus, "k": system.k,
             "max_multiplicity": max(report.multiplicity)},
            separators=(",", ":")))
    elif report.is_cover:
        _emit(args, f"cover: yes, minimal: {'yes' if report.is_minimal else 'no'}, "
                    f"N={system.modulus}, k={system.k}, "
                    f"max multiplicity={max(report.multiplicity)}")
    else:
        _emit(args, f"cover: no, witness: {report.witness}")
    return EXIT_TRUE if report.is_cover else EXIT_FALSE


def _cmd_construct(args) -> int:
    chosen = [x for x in (args.primes, args.greedy, args.primitive_primes) if x]
    if args.primes and not args.exponents:
        print("error: --primes needs --exponents", file=sys.stderr)
        return EXIT_INPUT
    if len(chosen) != 1:
        print("error: give exactly one of --primes/--exponents, --greedy, "
              "--primitive-plan", file=sys.stderr)
        return EXIT_INPUT
    try:
        if args.primes:
            plan = ExponentPlan(args.primes, args.exponents)
        elif args.greedy:
            plan = greedy_exponents(args.greedy)
        else:
            plan = primitive_plan(args.primitive_primes)
        cover = build_cover(plan)
    except PlanPreconditionError as exc:
        print(f"error ({exc.reason}): {exc}", file=sys.stderr)
        return EXIT_INPUT
    report = verify_cover(cover)
    assert report.is_cover, "constructed system failed re-verification"
    if args.format == "json":
        _emit(args, json.dumps(
            {"value": plan.value, "primes": list(plan.primes),
             "exponents": list(plan.exponents), "claimed": plan.claimed,
             "cover": cover.canonical().to_dict()}, separators=(",", ":")))
    else:
        _emit(args, f"value {plan.value} = " + " * ".join(
            f"{p}^{a}" for p, a in zip(plan.primes, plan.exponents))
            + f"\ncover ({cover.k} classes): {cover.canonical()}")
    return EXIT_TRUE


if __name__ == "__main__":
    sys.exit(main())
