"""Command-line front end.

Subcommands: check, construct, verify, oracle, factor.  Exit codes are a
stable contract: 0 pass/nice, 1 the checked property fails, 2 unusable
input, 3 an effort budget ran out, 4 internal self-check failure.  The
environment variable NICE_FACTOR_BUDGET overrides the factoring effort
cap.
"""

from __future__ import annotations

import argparse
import os
import sys

from .arith import BudgetExceeded, factorize
from .certificate import CertificateParseError, emit_json, emit_text, parse_json, parse_text
from .construct import NotNiceError, construct_good_set, niceness_condition
from .model import CongruenceAssignment
from .oracle import (
    AdmissibilityStatus,
    LcmTooLarge,
    SearchStatus,
    admissibility_scan,
    exists_good_assignment,
)
from .verify import check_complete, check_good, verify_certificate
from .model import divisors_gt1

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_INTERNAL = 4


def _fail(message: str, code: int) -> int:
    print(message, file=sys.stderr)
    return code


def _factor_budget() -> int | None:
    raw = os.environ.get("NICE_FACTOR_BUDGET")
    if raw is None:
        return None
    try:
        value = int(raw)
        if value < 1:
            raise ValueError
    except ValueError:
        raise SystemExit(_fail(f"NICE_FACTOR_BUDGET must be a positive integer, got {raw!r}", EXIT_USAGE))
    return value


def _cmd_check(args: argparse.Namespace) -> int:
    n = args.n
    if n < 1:
        return _fail("n must be >= 1", EXIT_USAGE)
    if n == 1:
        print("nice (trivially)")
        return EXIT_PASS
    try:
        verdict = niceness_condition(factorize(n, budget=_factor_budget()))
    except BudgetExceeded:
        return _fail("factoring budget exhausted", EXIT_BUDGET)
    word = "nice" if verdict.nice else "not nice"
    print(f"{word} (p={verdict.smallest_prime}, omega={verdict.omega_rest})")
    return EXIT_PASS if verdict.nice else EXIT_FAIL


def _cmd_construct(args: argparse.Namespace) -> int:
    n = args.n
    if n < 1:
        return _fail("n must be >= 1", EXIT_USAGE)
    budget = _factor_budget()
    try:
        assignment = construct_good_set(n, factor_budget=budget)
    except NotNiceError as exc:
        v = exc.verdict
        return _fail(f"not nice (p={v.smallest_prime}, omega={v.omega_rest})", EXIT_FAIL)
    except BudgetExceeded:
        return _fail("factoring budget exhausted", EXIT_BUDGET)
    report = verify_certificate(assignment, factor_budget=budget)
    if not report.passed:
        return _fail("internal error: constructed set failed self-verification", EXIT_INTERNAL)
    payload = emit_json(assignment, factor_budget=budget) if args.json else emit_text(assignment)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(payload)
    else:
        sys.stdout.write(payload)
    return EXIT_PASS


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        with open(args.path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        return _fail(f"cannot read {args.path}: {exc}", EXIT_USAGE)
    try:
        if text.lstrip().startswith("{"):
            assignment = parse_json(text)
            n = assignment.n
            entries = assignment.congruences()
        else:
            n, entries = parse_text(text)
    except CertificateParseError as exc:
        return _fail(f"parse error: {exc}", EXIT_USAGE)
    if args.n is not None:
        n = args.n
    budget = _factor_budget()
    report = check_good(entries)
    print(f"goodness: {'pass' if report.good else 'FAIL'} ({len(entries)} congruences)")
    for d1, d2, g in report.violations:
        print(f"  violation: moduli {d1} and {d2} overlap with common factor {g}")
    checked_complete = n is not None
    if checked_complete:
        try:
            completeness = check_complete(
                CongruenceAssignment(n, {c.modulus: c.residue for c in entries}),
                factor_budget=budget,
            )
        except BudgetExceeded:
            return _fail("factoring budget exhausted", EXIT_BUDGET)
        report = report.merged(completeness)
        print(f"completeness: {'pass' if completeness.complete else 'FAIL'} (n = {n})")
        for d in completeness.missing_divisors:
            print(f"  missing divisor: {d}")
        for d in completeness.extraneous_moduli:
            print(f"  extraneous modulus: {d}")
    else:
        print("completeness: skipped (no n supplied or embedded)")
    return EXIT_PASS if report.good and report.complete else EXIT_FAIL


def _cmd_oracle(args: argparse.Namespace) -> int:
    n = args.n
    if n < 1:
        return _fail("n must be >= 1", EXIT_USAGE)
    try:
        if args.admissible:
            outcome = admissibility_scan(n, node_budget=args.node_budget)
            if outcome.status is AdmissibilityStatus.BUDGET_EXCEEDED:
                return _fail(f"budget exceeded (nodes={outcome.nodes_expanded})", EXIT_BUDGET)
            print(f"{outcome.status.value} (good sets tested={outcome.good_sets_tested}, "
                  f"nodes={outcome.nodes_expanded})")
            if outcome.assignment:
                for m, r in sorted(outcome.assignment.items()):
                    print(f"{r} mod {m}")
            return (
                EXIT_PASS
                if outcome.status is AdmissibilityStatus.NO_GOOD_SET_IS_COVERING
                else EXIT_FAIL
            )
        moduli = divisors_gt1(factorize(n, budget=_factor_budget()))
        result = exists_good_assignment(moduli, node_budget=args.node_budget)
    except BudgetExceeded:
        return _fail("factoring budget exhausted", EXIT_BUDGET)
    except LcmTooLarge as exc:
        return _fail(str(exc), EXIT_USAGE)
    if result.status is SearchStatus.BUDGET_EXCEEDED:
        return _fail(f"budget exceeded (nodes={result.nodes_expanded})", EXIT_BUDGET)
    print(f"{result.status.value} (nodes={result.nodes_expanded})")
    if result.assignment:
        for m, r in sorted(result.assignment.items()):
            print(f"{r} mod {m}")
    return EXIT_PASS if result.status is SearchStatus.FOUND else EXIT_FAIL


def _cmd_factor(args: argparse.Namespace) -> int:
    n = args.n
    if n < 1:
        return _fail("n must be >= 1", EXIT_USAGE)
    try:
        f = factorize(n, budget=_factor_budget())
    except BudgetExceeded:
        return _fail("factoring budget exhausted", EXIT_BUDGET)
    if not f.pairs:
        print("1 = 1")
        return EXIT_PASS
    terms = " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in f.pairs)
    print(f"{n} = {terms}")
    return EXIT_PASS


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nicenum",
        description="Decide, construct, and verify good sets of congruences on the divisors of n.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide whether n is nice")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("construct", help="construct a good set of congruences for nice n")
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true", help="emit the JSON document format")
    p.add_argument("--out", metavar="PATH", help="write the certificate to PATH instead of stdout")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify", help="verify a certificate file (text or JSON)")
    p.add_argument("path")
    p.add_argument("--n", type=int, help="check completeness against this n")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("oracle", help="brute-force search over the divisors of n")
    p.add_argument("n", type=int)
    p.add_argument("--admissible", action="store_true",
                   help="look for a good assignment that is also a covering system")
    p.add_argument("--node-budget", type=int, default=10**8, metavar="B")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("factor", help="print the prime factorization of n")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_factor)

    return parser


def main(argv: list[str] | None = None) -> int:
    for stream in (sys.stdout, sys.stderr):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(line_buffering=True)
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
