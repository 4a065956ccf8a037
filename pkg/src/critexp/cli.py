"""Command-line front end: generate, analyze, betas, verify.

Exit codes: 0 success, 1 repetition violation or failed check, 2 invalid
arguments or malformed input, 3 size or memory-budget errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from typing import Optional

from .checks import (
    check_lemma1,
    check_lemma4,
    check_lemma5,
    check_theorem2,
    check_theorem3,
    verify_construction,
)
from .construction import (
    DEFAULT_MAX_LETTERS,
    build_schedule,
    build_word,
    find_obtainable,
    predicted_length,
)
from .errors import FormatError, SizeError
from .repetitions import find_violation, max_exponent, maximal_repetitions
from .words import Word


def parse_rational(text: str) -> Fraction:
    """Exact rational from 'p/q' or a finite decimal; never via float."""
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def _parse_alpha(text: str) -> Fraction:
    alpha = parse_rational(text)
    if alpha <= 2:
        raise ValueError(f"alpha must exceed 2, got {alpha}")
    return alpha


def _exact_decimal(value: Fraction) -> Optional[str]:
    # Finite decimal expansion, or None when the denominator has other factors.
    den = value.denominator
    twos = (den & -den).bit_length() - 1
    rest = den >> twos
    fives = 0
    while rest % 5 == 0:
        rest //= 5
        fives += 1
    if rest != 1:
        return None
    digits = max(twos, fives)
    scaled = abs(value.numerator) * 10**digits // den
    sign = "-" if value < 0 else ""
    if digits == 0:
        return f"{sign}{scaled}"
    text = str(scaled).rjust(digits + 1, "0")
    return f"{sign}{text[:-digits]}.{text[-digits:]}"


def _fmt(value: Fraction) -> str:
    dec = _exact_decimal(value)
    frac = f"{value.numerator}/{value.denominator}"
    return frac if dec is None else f"{frac} ({dec})"


def _read_word(path: str, fmt: str, literal: bool) -> Word:
    if literal:
        return Word(path)
    if fmt == "packed":
        with open(path, "rb") as fh:
            return Word.from_packed(fh.read())
    with open(path, "r", encoding="ascii") as fh:
        return Word.from_text(fh.read())


def _write_word(word: Word, path: str, fmt: str) -> None:
    if fmt == "packed":
        with open(path, "wb") as fh:
            fh.write(word.to_packed())
    else:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(word.to_text())
            fh.write("\n")


def cmd_generate(args) -> int:
    alpha = _parse_alpha(args.alpha)
    if args.target_len is not None and args.target_len < 1:
        raise ValueError("--target-len must be positive")
    if args.levels < 1:
        raise ValueError("--levels must be positive")

    if args.target_len is None:
        schedule = build_schedule(alpha, args.levels)
    else:
        levels = 1
        while True:
            schedule = build_schedule(alpha, levels)
            if predicted_length(schedule) >= args.target_len:
                break
            levels += 1
    word, witnesses = build_word(schedule, args.budget)
    if args.target_len is not None:
        word = word[: args.target_len]

    print(f"alpha: {_fmt(alpha)}")
    print("schedule:")
    print("  level  r   s        t  beta")
    for i, entry in enumerate(schedule.params, start=1):
        gap = alpha - entry.beta
        print(
            f"  {i:5d}  {entry.r}  {entry.s:2d}  {entry.t:7d}  "
            f"{_fmt(entry.beta)}  alpha-beta={_fmt(gap)}"
        )
    print("predicted witnesses:")
    for wit in witnesses:
        print(
            f"  level {wit.level}: period {wit.period}, "
            f"min length {wit.min_length}, exponent >= {_fmt(wit.beta)}"
        )
    print(f"word length: {len(word)}")
    if args.out is None:
        print(word.to_text())
    else:
        _write_word(word, args.out, args.format)
        print(f"wrote {args.out} ({args.format}, {len(word)} letters)")
    if args.report is not None:
        payload = {
            "alpha": f"{alpha.numerator}/{alpha.denominator}",
            "length": len(word),
            "schedule": [
                {
                    "level": i,
                    "r": entry.r,
                    "s": entry.s,
                    "t": entry.t,
                    "beta_numerator": entry.beta.numerator,
                    "beta_denominator": entry.beta.denominator,
                }
                for i, entry in enumerate(schedule.params, start=1)
            ],
            "witnesses": [
                {
                    "level": wit.level,
                    "period": wit.period,
                    "min_length": wit.min_length,
                    "beta_numerator": wit.beta.numerator,
                    "beta_denominator": wit.beta.denominator,
                }
                for wit in witnesses
            ],
        }
        with open(args.report, "w", encoding="ascii") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
        print(f"wrote report {args.report}")
    return 0


def cmd_analyze(args) -> int:
    alpha = _parse_alpha(args.alpha) if args.alpha is not None else None
    word = _read_word(args.input, args.format, args.literal)
    runs = maximal_repetitions(word)
    top = max_exponent(word)

    print(f"word length: {len(word)}")
    print(f"maximal repetitions: {len(runs)}")
    shown = runs[: args.max_runs]
    for run in shown:
        print(
            f"  start={run.start} period={run.period} length={run.length} "
            f"exponent={run.exponent.numerator}/{run.exponent.denominator}"
        )
    if len(runs) > len(shown):
        print(f"  ... {len(runs) - len(shown)} more (use --report for all)")
    print(f"max exponent: {'none' if top is None else _fmt(top)}")

    verdict = "free"
    witness = None
    if alpha is not None:
        witness = find_violation(word, alpha)
        verdict = "free" if witness is None else "violation"
        if witness is None:
            print(f"verdict: free of powers >= {_fmt(alpha)}")
        else:
            print(
                f"verdict: violation start={witness.start} period={witness.period} "
                f"length={witness.length} "
                f"exponent={witness.exponent.numerator}/{witness.exponent.denominator}"
            )

    if args.report is not None:
        payload = {
            "length": len(word),
            "runs": [
                {
                    "start": r.start,
                    "period": r.period,
                    "length": r.length,
                    "exponent": f"{r.exponent.numerator}/{r.exponent.denominator}",
                }
                for r in runs
            ],
            "max_exponent": None
            if top is None
            else f"{top.numerator}/{top.denominator}",
            "alpha": None if alpha is None else f"{alpha.numerator}/{alpha.denominator}",
            "verdict": verdict,
            "witness": None
            if witness is None
            else {
                "start": witness.start,
                "period": witness.period,
                "length": witness.length,
            },
        }
        with open(args.report, "w", encoding="ascii") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
        print(f"wrote report {args.report}")
    return 1 if (alpha is not None and witness is not None) else 0


def cmd_betas(args) -> int:
    alpha = _parse_alpha(args.alpha)
    if not 3 <= args.s_min <= args.s_max <= 64:
        raise ValueError("need 3 <= s-min <= s-max <= 64")
    print(f"alpha: {_fmt(alpha)}   r = ceil(alpha) = {math.ceil(alpha)}")
    print("  s        t  beta                     alpha-beta")
    for s in range(args.s_min, args.s_max + 1):
        entry = find_obtainable(alpha, s)
        if entry is None:
            print(f"  {s:2d}     none")
        else:
            print(
                f"  {s:2d}  {entry.t:7d}  {_fmt(entry.beta):23s}  "
                f"{_fmt(alpha - entry.beta)}"
            )
    return 0


def cmd_verify(args) -> int:
    alpha = _parse_alpha(args.alpha)
    if args.levels < 1:
        raise ValueError("--levels must be positive")
    reports = [
        check_lemma1(args.lemma1_s_max),
        check_theorem2(args.t2_samples, args.t2_max_len, alpha, seed=args.seed),
        check_theorem3(args.t3_samples, args.t3_max_len, seed=args.seed),
        check_lemma4(alpha, args.l4_samples, seed=args.seed),
    ]
    params = build_schedule(alpha, 1).params[0]
    reports.append(check_lemma5(params, alpha, args.l5_samples, seed=args.seed))
    reports.append(verify_construction(alpha, args.levels, args.budget))
    ok = True
    for report in reports:
        print(report.render())
        ok = ok and report.passed
    print("all checks passed" if ok else "CHECK FAILURES PRESENT")
    if args.report is not None:
        payload = {
            "alpha": f"{alpha.numerator}/{alpha.denominator}",
            "seed": args.seed,
            "passed": ok,
            "checks": [report.as_dict() for report in reports],
        }
        with open(args.report, "w", encoding="ascii") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
        print(f"wrote report {args.report}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="critexp",
        description=(
            "Construct binary words whose repetition exponents approach a "
            "chosen rational alpha > 2, analyze repetitions exactly, and run "
            "the verification suite."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="construct a word for alpha")
    gen.add_argument("--alpha", required=True, help="target exponent, 'p/q' or decimal")
    gen.add_argument("--levels", type=int, default=3, help="schedule depth (default 3)")
    gen.add_argument(
        "--target-len", type=int, default=None, help="truncate to this many letters"
    )
    gen.add_argument("--out", default=None, help="output path (default: print word)")
    gen.add_argument("--format", choices=("text", "packed"), default="text")
    gen.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_MAX_LETTERS,
        help=f"letter budget per word (default {DEFAULT_MAX_LETTERS})",
    )
    gen.add_argument("--report", default=None, help="write a JSON report here")
    gen.set_defaults(func=cmd_generate)

    ana = sub.add_parser("analyze", help="repetition analysis of a word")
    ana.add_argument("input", help="path to the word (or the word itself with --literal)")
    ana.add_argument("--literal", action="store_true", help="input is the word itself")
    ana.add_argument("--format", choices=("text", "packed"), default="text")
    ana.add_argument("--alpha", default=None, help="freeness threshold to check")
    ana.add_argument("--report", default=None, help="write a JSON report here")
    ana.add_argument("--max-runs", type=int, default=10, help="runs to print")
    ana.set_defaults(func=cmd_analyze)

    bet = sub.add_parser("betas", help="tabulate reachable exponents per s")
    bet.add_argument("--alpha", required=True)
    bet.add_argument("--s-min", type=int, default=3)
    bet.add_argument("--s-max", type=int, default=12)
    bet.set_defaults(func=cmd_betas)

    ver = sub.add_parser("verify", help="run the verification suite")
    ver.add_argument("--alpha", required=True)
    ver.add_argument("--levels", type=int, default=3)
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--lemma1-s-max", type=int, default=10)
    ver.add_argument("--t2-samples", type=int, default=200)
    ver.add_argument("--t2-max-len", type=int, default=12)
    ver.add_argument("--t3-samples", type=int, default=500)
    ver.add_argument("--t3-max-len", type=int, default=64)
    ver.add_argument("--l4-samples", type=int, default=100)
    ver.add_argument("--l5-samples", type=int, default=50)
    ver.add_argument("--budget", type=int, default=DEFAULT_MAX_LETTERS)
    ver.add_argument("--report", default=None, help="write a JSON report here")
    ver.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
