"""Command-line front end.

Subcommands: ``seq`` (term listings), ``maxdiv`` (maximal divisor index of
a partial sum), ``trick`` (common-trick certificates and demonstrations),
``verify`` (the verification suites), and ``oeis`` (sequence export,
including OEIS b-file format).

Exit codes are a stable contract:
  0  success (WARN lines for conjecture-level mismatches still exit 0)
  1  a theorem-level verification check failed
  2  flag validation failure or unknown OEIS id
  3  --closed requested for a case no closed form covers
  4  --both found brute force and closed form in disagreement
  5  --init given but no common trick exists for that count

Data goes to stdout, diagnostics to stderr.  Big integers are always
printed in full decimal.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .core import (
    NAMED_FAMILIES,
    RecurrenceSpec,
    SequenceDef,
    first_kind,
    second_kind,
    sequence_values,
)
from .divisibility import (
    FOUND,
    OEIS_IDS,
    DivisibilityResult,
    UnsupportedCaseError,
    lucas_odd_cycle,
    max_div_index_bruteforce,
    max_div_index_closed,
    oeis_sequence,
)
from .identities import (
    check_identity_suite,
    rounding_corollary_scan,
    verify_fl_uniqueness,
    verify_ll_uniqueness,
)
from .tricks import (
    NoTrickError,
    common_trick_range,
    find_common_trick,
    nnacci_trick_scan,
    perform_trick,
    verify_nnacci_theorem,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_UNSUPPORTED_CLOSED = 3
EXIT_BOTH_MISMATCH = 4
EXIT_NO_TRICK = 5

CLOSED_FORM_FAMILIES = (
    "fibonacci", "lucas", "jacobsthal", "pell", "signed-fibonacci", "fib-bisection",
)


# --------------------------------------------------------------------------
# argument plumbing
# --------------------------------------------------------------------------


def _parse_init(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"--init wants comma-separated integers, got {text!r}")


def _add_family_flags(sub: argparse.ArgumentParser, with_init: bool = True) -> None:
    sub.add_argument("--family", choices=sorted(NAMED_FAMILIES),
                     help="a named sequence family")
    sub.add_argument("--p", type=int, help="P of the recurrence x(n) = P x(n-1) - Q x(n-2)")
    sub.add_argument("--q", type=int, help="Q of the recurrence")
    sub.add_argument("--kind", choices=("first", "second"), default="first",
                     help="with --p/--q: first kind starts 0,1; second kind 2,P")
    if with_init:
        sub.add_argument("--init", type=_parse_init,
                         help="custom initial terms at indices 0..k-1 (comma separated)")


def _resolve_sequence(parser: argparse.ArgumentParser, args) -> SequenceDef:
    if args.family is not None:
        if args.p is not None or args.q is not None:
            parser.error("give either --family or --p/--q, not both")
        return NAMED_FAMILIES[args.family]
    if args.p is None or args.q is None:
        parser.error("need --family or both --p and --q")
    if getattr(args, "init", None) is not None:
        rec = RecurrenceSpec.from_pq(args.p, args.q)
        return SequenceDef(rec, args.init)
    if args.kind == "second":
        return second_kind(args.p, args.q)
    return first_kind(args.p, args.q)


def _emit(lines: list[str]) -> None:
    for line in lines:
        print(line)


# --------------------------------------------------------------------------
# seq
# --------------------------------------------------------------------------


def cmd_seq(parser: argparse.ArgumentParser, args) -> int:
    seq = _resolve_sequence(parser, args)
    if args.count < 1:
        parser.error("--count must be at least 1")
    values = sequence_values(seq, args.count - 1)
    if args.format == "json-lines":
        for i, v in enumerate(values):
            print(json.dumps({"command": "seq", "family": seq.family,
                              "index": i, "value": v}))
    else:
        print(" ".join(str(v) for v in values))
    return EXIT_OK


# --------------------------------------------------------------------------
# maxdiv
# --------------------------------------------------------------------------


def _result_text(result: DivisibilityResult, mode: str) -> str:
    if result.outcome == FOUND:
        i = "-" if result.lucas_index is None else result.lucas_index
        return (f"[{mode}] n={result.n} m={result.m} z={result.z} i={i} "
                f"confidence={result.confidence}")
    return f"[{mode}] n={result.n} outcome={result.outcome} confidence={result.confidence}"


def _result_json(result: DivisibilityResult, mode: str, family: str) -> str:
    payload = {"command": "maxdiv", "family": family, "mode": mode}
    payload.update(result.to_payload())
    return json.dumps(payload)


def cmd_maxdiv(parser: argparse.ArgumentParser, args) -> int:
    seq = _resolve_sequence(parser, args)
    if args.n < 1:
        parser.error("--n must be at least 1")
    family = seq.family
    emit = (lambda r, mode: print(_result_json(r, mode, family))) \
        if args.format == "json-lines" else \
        (lambda r, mode: print(_result_text(r, mode)))

    if args.mode in ("brute", "both"):
        brute = max_div_index_bruteforce(seq, args.n)
        emit(brute, "brute")
    if args.mode in ("closed", "both"):
        closed = max_div_index_closed(family, args.n)  # may raise -> exit 3
        emit(closed, "closed")
    if args.mode == "both":
        if brute.same_answer(closed):
            print("match")
            return EXIT_OK
        print("MISMATCH")
        return EXIT_BOTH_MISMATCH
    return EXIT_OK


# --------------------------------------------------------------------------
# trick
# --------------------------------------------------------------------------


def _resolve_recurrence(parser: argparse.ArgumentParser, args) -> RecurrenceSpec:
    if args.order is not None:
        if args.p is not None or args.q is not None:
            parser.error("give either --order or --p/--q, not both")
        if args.order < 2:
            parser.error("--order must be at least 2")
        return RecurrenceSpec.nnacci(args.order)
    if args.p is None or args.q is None:
        parser.error("need --order or both --p and --q")
    return RecurrenceSpec.from_pq(args.p, args.q)


def cmd_trick(parser: argparse.ArgumentParser, args) -> int:
    rec = _resolve_recurrence(parser, args)
    if args.n < 1:
        parser.error("--n must be at least 1")

    if args.init is not None:
        if len(args.init) != rec.order:
            parser.error(f"--init needs exactly {rec.order} values for this recurrence")
        outcome = perform_trick(args.init, rec, args.n)  # may raise -> exit 5
        if args.format == "json-lines":
            print(json.dumps({"command": "trick", "n": args.n, "sum": outcome.total,
                              "m": outcome.m, "mth_term": outcome.mth_term,
                              "z": outcome.z}))
        elif outcome.m is None:
            print(f"sum={outcome.total} (zero for every such sequence)")
        else:
            print(f"sum={outcome.total} term{outcome.m}={outcome.mth_term} z={outcome.z}")
        return EXIT_OK

    cert = find_common_trick(rec, args.n)
    if args.format == "json-lines":
        if cert is None:
            print(json.dumps({"command": "trick", "n": args.n, "certificate": None}))
        else:
            print(json.dumps({
                "command": "trick", "n": args.n, "m": cert.m, "z": cert.z,
                "sum_form": list(cert.sum_form.coeffs),
                "term_form": None if cert.term_form is None else list(cert.term_form.coeffs),
                "trivial": cert.trivial, "degenerate_zero": cert.degenerate_zero,
                "periodic_m": cert.periodic_m,
            }))
        return EXIT_OK
    if cert is None:
        print(f"no common trick for n={args.n}")
    elif cert.degenerate_zero:
        print(f"n={args.n}: the sum is 0 for every sequence with this recurrence")
    else:
        qualifier = " (count-one identity, holds for any recurrence)" if cert.trivial else ""
        suffix = "; index recurs periodically" if cert.periodic_m else ""
        print(f"n={args.n}: sum = {cert.z} * term {cert.m}   "
              f"[{cert.sum_form} = {cert.z}*({cert.term_form})]{qualifier}{suffix}")
    return EXIT_OK


# --------------------------------------------------------------------------
# verify suites
# --------------------------------------------------------------------------


class _SuiteLog:
    """PASS/FAIL/WARN line collector; failures flip the exit code, warns don't."""

    def __init__(self) -> None:
        self.failed = False
        self.warned = False

    def ok(self, message: str) -> None:
        print(f"PASS  {message}")

    def fail(self, message: str) -> None:
        self.failed = True
        print(f"FAIL  {message}")

    def warn(self, message: str) -> None:
        self.warned = True
        print(f"WARN  {message}")

    def check(self, good: bool, message: str) -> None:
        self.ok(message) if good else self.fail(message)

    @property
    def exit_code(self) -> int:
        return EXIT_VERIFY_FAILED if self.failed else EXIT_OK


def _suite_identities(log: _SuiteLog, bound: int) -> None:
    report = check_identity_suite(bound)
    for check in report.checks:
        note = f"  ({check.note})" if check.note else ""
        if check.passed:
            log.ok(f"identity {check.name}: {check.checked} instances{note}")
        else:
            log.fail(f"identity {check.name}: failures {check.failures[:3]}{note}")


def _suite_fl(log: _SuiteLog, bound: int) -> None:
    report = verify_fl_uniqueness(bound)
    log.check(report.passed,
              f"F*L uniqueness bound {bound}: {report.total_quadruples} quadruples, "
              f"cases {dict(sorted(report.case_counts.items()))}, "
              f"{len(report.unclassified)} unclassified")


def _suite_ll(log: _SuiteLog, bound: int) -> None:
    report = verify_ll_uniqueness(bound)
    log.check(report.passed,
              f"L*L uniqueness bound {bound}: {report.total_quadruples} quadruples, "
              f"cases {dict(sorted(report.case_counts.items()))}, "
              f"{len(report.unclassified)} unclassified")


def _suite_rounding(log: _SuiteLog, bound: int) -> None:
    for family in ("fibonacci", "lucas"):
        report = rounding_corollary_scan(family, bound)
        log.check(report.passed,
                  f"rounding corollary {family} n<={bound}: "
                  f"{report.pairs_checked} pairs, "
                  f"{len(report.inequality_failures)} inequality / "
                  f"{len(report.quotient_failures)} quotient failures")


def _suite_cycles(log: _SuiteLog, bound: int) -> None:
    table = lucas_odd_cycle(bound)
    log.check(table.divisibility_verified,
              f"odd-count Lucas cycle divisibility for k<={table.verified_bound}")

    from .core import LUCAS, period_mod
    for modulus, expect_period, expect_residues in (
        (4, 6, [2, 1, 3, 0, 3, 3]),
        (7, 16, [2, 1, 3, 4, 0, 4, 4, 1, 5, 6, 4, 3, 0, 3, 3, 6]),
    ):
        info = period_mod(LUCAS, modulus)
        log.check((info.period, info.residues) == (expect_period, expect_residues),
                  f"Lucas residues mod {modulus}: period {info.period}")

    # maximality along the cycle is empirical; Pell maximality is conjectured
    odd_bound = min(bound, 401)
    mismatches = []
    for n in range(1, odd_bound + 1, 2):
        brute = max_div_index_bruteforce(NAMED_FAMILIES["lucas"], n)
        closed = max_div_index_closed("lucas", n)
        if not brute.same_answer(closed):
            mismatches.append(n)
    if mismatches:
        log.warn(f"odd-count Lucas cycle maximality (empirical) differs from "
                 f"brute force at n={mismatches[:5]}")
    else:
        log.ok(f"odd-count Lucas cycle maximality matches brute force for n<={odd_bound}")

    pell_bound = min(bound, 200)
    mismatches = []
    for n in range(1, pell_bound + 1):
        brute = max_div_index_bruteforce(NAMED_FAMILIES["pell"], n)
        closed = max_div_index_closed("pell", n)
        if not brute.same_answer(closed):
            mismatches.append(n)
    if mismatches:
        log.warn(f"Pell maximality (conjecture) differs from brute force at "
                 f"n={mismatches[:5]}")
    else:
        log.ok(f"Pell maximality conjecture matches brute force for n<={pell_bound}")


def _trick_set(rec: RecurrenceSpec, n_max: int) -> dict[int, object]:
    return {n: cert for n, cert in common_trick_range(rec, n_max) if cert is not None}


def _suite_tricks(log: _SuiteLog, bound: int) -> None:
    # count 1 is the identity trick for every recurrence; family statements
    # are compared on counts >= 2, and the n=1 certificate must be trivial
    # wherever a family's pattern does not claim it
    fib = _trick_set(RecurrenceSpec.from_pq(1, -1), bound)
    expected = {3} | {n for n in range(2, bound + 1) if n % 4 == 2}
    got = {n for n, c in fib.items() if not c.trivial}
    log.check(got == expected,
              f"Fibonacci-like tricks at exactly {{3}} + {{2 mod 4}} up to {bound}")
    agree = all(c.m == max_div_index_closed("fibonacci", n).m
                for n, c in fib.items() if not c.trivial)
    log.check(agree, "Fibonacci-like certified index equals the maximal divisor index")

    u11 = _trick_set(RecurrenceSpec.from_pq(1, 1), bound)
    log.check({n % 6 for n in u11} <= {0, 1, 3, 5}
              and all(n in u11 for n in range(1, bound + 1) if n % 6 in (0, 1, 3, 5)),
              f"U(1,1)-like tricks at exactly counts 1,3,5,6 mod 6 up to {bound}")

    jac = _trick_set(RecurrenceSpec.from_pq(1, -2), bound)
    log.check(all(c.trivial for c in jac.values()),
              f"Jacobsthal-like: no common trick for any count 2..{bound}")

    u31 = _trick_set(RecurrenceSpec.from_pq(3, 1), bound)
    odd_ok = (all(n % 2 == 1 for n in u31)
              and all(n in u31 for n in range(1, bound + 1, 2))
              and all(c.m == (n + 1) // 2 for n, c in u31.items()))
    log.check(odd_ok, f"U(3,1)-like tricks at exactly the odd counts up to {bound}")

    pell = _trick_set(RecurrenceSpec.from_pq(2, -1), bound)
    pell_vals = sequence_values(NAMED_FAMILIES["pell"], bound // 2 + 2)
    pell_ok = ({n for n, c in pell.items() if not c.trivial}
               == {n for n in range(4, bound + 1, 4)})
    pell_ok = pell_ok and all(
        (c.m, c.z) == (n // 2 + 1, 2 * pell_vals[n // 2])
        for n, c in pell.items() if not c.trivial)
    log.check(pell_ok,
              f"Pell-like tricks at exactly multiples of 4 up to {bound}, "
              f"with multiplier twice a Pell number")


def _suite_nnacci(log: _SuiteLog, bound: int) -> None:
    top_order = max(2, bound)
    for order in range(2, top_order + 1):
        log.check(verify_nnacci_theorem(order),
                  f"nacci sum identities hold coefficientwise at order {order}")
    scan = {c.n: (c.m, c.z) for c in nnacci_trick_scan(3, 10)}
    log.check(scan == {3: (4, 1), 4: (4, 2), 8: (7, 4)},
              "order-3 scan finds tricks exactly at counts 3, 4 and 8")


_SUITES = {
    "identities": _suite_identities,
    "fl": _suite_fl,
    "ll": _suite_ll,
    "rounding": _suite_rounding,
    "cycles": _suite_cycles,
    "tricks": _suite_tricks,
    "nnacci": _suite_nnacci,
}


def cmd_verify(parser: argparse.ArgumentParser, args) -> int:
    if args.bound < 1:
        parser.error("--bound must be at least 1")
    log = _SuiteLog()
    _SUITES[args.suite](log, args.bound)
    if log.failed:
        print("RESULT: FAIL", file=sys.stderr)
    elif log.warned:
        print("RESULT: PASS (with warnings)", file=sys.stderr)
    else:
        print("RESULT: PASS", file=sys.stderr)
    return log.exit_code


# --------------------------------------------------------------------------
# oeis
# --------------------------------------------------------------------------


def cmd_oeis(parser: argparse.ArgumentParser, args) -> int:
    if args.count < 1:
        parser.error("--count must be at least 1")
    values = oeis_sequence(args.id, args.count)
    if args.format == "bfile":
        # OEIS exchange format: "index value" per line, offset 1
        _emit([f"{i} {v}" for i, v in enumerate(values, start=1)])
    else:
        print(" ".join(str(v) for v in values))
    return EXIT_OK


# --------------------------------------------------------------------------
# parser and entry point
# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lucastrick",
        description="Exact Lucas/n-nacci sequence sums, divisibility patterns, "
                    "and the partial-sum trick.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_seq = subs.add_parser("seq", help="print sequence terms from index 0")
    _add_family_flags(p_seq)
    p_seq.add_argument("--count", type=int, required=True, help="how many terms")
    p_seq.add_argument("--format", choices=("text", "json-lines"), default="text")
    p_seq.set_defaults(handler=cmd_seq)

    p_max = subs.add_parser("maxdiv",
                            help="largest index whose term divides the partial sum")
    _add_family_flags(p_max)
    p_max.add_argument("--n", type=int, required=True, help="how many terms to sum")
    mode = p_max.add_mutually_exclusive_group()
    mode.add_argument("--brute", dest="mode", action="store_const", const="brute",
                      help="certified scan (default)")
    mode.add_argument("--closed", dest="mode", action="store_const", const="closed",
                      help="closed form (named families only)")
    mode.add_argument("--both", dest="mode", action="store_const", const="both",
                      help="run both and compare")
    p_max.set_defaults(mode="brute")
    p_max.add_argument("--format", choices=("text", "json-lines"), default="text")
    p_max.set_defaults(handler=cmd_maxdiv)

    p_trick = subs.add_parser("trick", help="common-trick certificate or demonstration")
    p_trick.add_argument("--p", type=int)
    p_trick.add_argument("--q", type=int)
    p_trick.add_argument("--order", type=int,
                         help="n-nacci recurrence of this order instead of --p/--q")
    p_trick.add_argument("--n", type=int, required=True, help="how many terms to sum")
    p_trick.add_argument("--init", type=_parse_init,
                         help="perform the trick on these starting terms (positions 1..k)")
    p_trick.add_argument("--format", choices=("text", "json-lines"), default="text")
    p_trick.set_defaults(handler=cmd_trick)

    p_verify = subs.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--suite", choices=sorted(_SUITES), required=True)
    p_verify.add_argument("--bound", type=int, required=True)
    p_verify.set_defaults(handler=cmd_verify)

    p_oeis = subs.add_parser("oeis", help="emit one of the contributed sequences")
    p_oeis.add_argument("--id", choices=OEIS_IDS, required=True)
    p_oeis.add_argument("--count", type=int, required=True)
    p_oeis.add_argument("--format", choices=("text", "bfile"), default="text")
    p_oeis.set_defaults(handler=cmd_oeis)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(parser, args)
    except UnsupportedCaseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED_CLOSED
    except NoTrickError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_TRICK
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
