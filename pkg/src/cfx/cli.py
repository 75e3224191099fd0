"""Command-line front end.

Exit codes: 0 when every check in the invocation passed, 1 when a
verification failed, 2 for invalid arguments, 3 for engine errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cf_core import GeneralizedCF, eval_cf, to_regular
from .errors import CfxError, NotRegular, PreconditionViolated
from .exact_arith import X, format_integer, format_rational, parse_poly, parse_rational, rat
from .jsonio import cf_from_json, cf_to_json, regular_to_json, sequence_to_json
from .recurrence_sequences import (
    A001697,
    PolyRecurrence,
    a001697,
    check_invariants,
    generate,
)
from .series_expansions import (
    SeriesSpec,
    expand_inv_S_shifted,
    expand_S,
    expand_T,
    expand_T_contracted,
    s_partial_sum,
    shifted_partial_sum,
    t_partial_sum,
)
from .theta_transforms import (
    SumSpec,
    cf_to_sum_euler,
    cf_to_sum_hone,
    cf_to_sum_varona,
    euler_cf,
    hone_cf,
    sum_sigma,
    sum_tau,
    varona_aux_cf,
    varona_cf,
)
from .verification import SUITES, run_suite

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_ENGINE = 0, 1, 2, 3

TRANSFORMS = {
    "euler": (euler_cf, sum_tau, "tau", 1),
    "hone": (hone_cf, sum_sigma, "sigma", 1),
    "varona": (varona_cf, sum_tau, "tau", 2),
    "varona-aux": (varona_aux_cf, sum_tau, "tau", 2),
}

INVERSES = {
    "euler": (cf_to_sum_euler, lambda n: n),
    "hone": (cf_to_sum_hone, lambda n: 2 * n),
    "varona": (cf_to_sum_varona, lambda n: 3 * n - 1),
}


class UsageError(Exception):
    pass


def _numbers(text: str, flag: str) -> list:
    out = []
    for i, item in enumerate(text.split(","), start=1):
        try:
            out.append(parse_rational(item))
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"{flag}: entry {i}: {exc}") from None
    return out


def _positive_int(value, flag: str) -> int:
    try:
        v = int(value)
    except (TypeError, ValueError):
        raise UsageError(f"{flag}: expected an integer, got {value!r}") from None
    if v < 1:
        raise UsageError(f"{flag}: must be >= 1, got {v}")
    return v


def _poly(text: str):
    try:
        return parse_poly(text)
    except (ValueError, json.JSONDecodeError) as exc:
        raise UsageError(f"--f: {exc}") from None


def cmd_transform(args) -> tuple:
    transform, oracle, oracle_name, min_n = TRANSFORMS[args.kind]
    x = _numbers(args.x, "--x")
    y = _numbers(args.y, "--y")
    if len(x) != len(y):
        raise UsageError(f"--x has {len(x)} entries but --y has {len(y)}")
    for flag, seq in (("--x", x), ("--y", y)):
        for i, v in enumerate(seq, start=1):
            if v == 0:
                raise UsageError(f"{flag}: entry {i} is zero")
    if len(x) < min_n:
        raise UsageError(f"{args.kind}: n >= {min_n} required (got n = {len(x)})")
    s = SumSpec(tuple(x), tuple(y))
    cf = transform(s)
    value = eval_cf(cf)
    expected = oracle(s)
    out = {
        "transform": args.kind,
        "n": len(x),
        "cf": cf_to_json(cf),
        "value": format_rational(value),
        oracle_name: format_rational(expected),
        "match": value == expected,
    }
    return out, out["match"]


def cmd_invert(args) -> tuple:
    to_sum, depth = INVERSES[args.kind]
    if args.cf is not None:
        try:
            cf = cf_from_json(json.loads(args.cf))
        except (ValueError, KeyError, json.JSONDecodeError) as exc:
            raise UsageError(f"--cf: {exc}") from None
    else:
        if args.a is None or args.b is None:
            raise UsageError("give either --cf or both --a and --b")
        a = _numbers(args.a, "--a")
        b = _numbers(args.b, "--b")
        if len(a) != len(b):
            raise UsageError(f"--a has {len(a)} entries but --b has {len(b)}")
        for i, v in enumerate(a, start=1):
            if v == 0:
                raise UsageError(f"--a: entry {i} is zero")
        cf = GeneralizedCF(tuple(zip(a, b)))
    n = _positive_int(args.n, "--n")
    if depth(n) > len(cf):
        raise UsageError(f"{args.kind} with n = {n} needs {depth(n)} terms, got {len(cf)}")
    terms = to_sum(cf, n)
    total = sum(terms, rat(0))
    value = eval_cf(cf, depth(n))
    out = {
        "lemma": args.kind,
        "n": n,
        "terms": [format_rational(t) for t in terms],
        "sum": format_rational(total),
        "value": format_rational(value),
        "match": total == value,
    }
    return out, out["match"]


def cmd_sequence(args) -> tuple:
    N = _positive_int(args.n, "--n")
    if args.preset:
        rec = A001697
        seq = a001697(N)
        agree = generate(rec, N).values == seq.values
    else:
        if args.f is None:
            raise UsageError("give --preset a001697 or --f with --x1")
        rec = PolyRecurrence(_poly(args.f), _positive_int(args.x1 or 1, "--x1"), args.f)
        seq = generate(rec, N)
        agree = True
    report = check_invariants(seq, rec)
    out = sequence_to_json(seq)
    out["invariants"] = report.summary()
    out["failures"] = [
        {"check": c.name, "index": c.index, "detail": c.detail} for c in report.failures()
    ]
    if args.preset:
        out["recurrence_agrees"] = agree
    ok = report.ok and agree
    out["verified"] = ok
    return out, ok


def _positive_integer_terms(cf: GeneralizedCF) -> bool:
    return all(v.denominator == 1 and v > 0 for pair in cf.terms for v in pair)


def cmd_series(args) -> tuple:
    F = _poly(args.f) if args.f else X
    x1 = _positive_int(args.x1 if args.x1 is not None else 1, "--x1")
    h = _positive_int(args.h if args.h is not None else 1, "--h")
    n = _positive_int(args.n, "--n")
    rec = PolyRecurrence(F, x1, str(F))
    kind = args.kind
    notice = None
    if kind in ("T", "T-contracted") and n < 2:
        raise UsageError("--n: T expansions need n >= 2")
    if kind == "T" and F.is_x():
        kind = "T-contracted"
        notice = "F = X makes b_3k = 0; routed to the contracted T expansion"
        print(f"notice: {notice}", file=sys.stderr)
    out = {"series": kind, "h": format_integer(h), "x1": format_integer(x1), "F": F.to_json(),
           "truncation": n}
    if notice:
        out["notice"] = notice
    if kind == "S":
        cf = expand_S(SeriesSpec(rec, h, "S", n))
        xs = generate(rec, n).values
        partial = s_partial_sum(xs, h, n)
        verified = all(eval_cf(cf, 2 * m) == s_partial_sum(xs, h, m) for m in range(1, n + 1))
        positive = _positive_integer_terms(cf)
    elif kind == "invS":
        shift, cf = expand_inv_S_shifted(SeriesSpec(rec, h, "S", n))
        xs = generate(rec, n + shift.N).values
        partial = shifted_partial_sum(shift, xs, h, n)
        verified = all(
            eval_cf(cf, 2 * j + 1) == 1 / shifted_partial_sum(shift, xs, h, j)
            for j in range(0 if shift.t else 1, n + 1)
        )
        positive = _positive_integer_terms(cf)
        out["shift"] = {"N": shift.N, "t": format_integer(shift.t),
                        "x_N": format_integer(shift.x_N), "degenerate": shift.degenerate}
        out["value_is_reciprocal"] = True
    else:
        spec = SeriesSpec(rec, h, "T", n)
        xs = generate(rec, n).values
        partial = t_partial_sum(xs, h, n)
        if kind == "T":
            cf = expand_T(spec)
            verified = all(
                eval_cf(cf, 3 * m - 4) == t_partial_sum(xs, h, m) for m in range(2, n + 1)
            )
        else:
            cf = expand_T_contracted(spec)
            verified = all(
                eval_cf(expand_T_contracted(SeriesSpec(rec, h, "T", m)))
                == eval_cf(expand_T(SeriesSpec(rec, h, "T", m), formal=True))
                == t_partial_sum(xs, h, m)
                for m in range(2, n + 1)
            )
        positive = _positive_integer_terms(cf)
    out["cf"] = cf_to_json(cf)
    out["partial_sum"] = format_rational(partial)
    out["value"] = format_rational(eval_cf(cf))
    out["positive_integer_terms"] = positive
    try:
        out["regular"] = regular_to_json(to_regular(cf))
    except NotRegular:
        out["regular"] = None
    out["verified"] = verified
    return out, verified


def cmd_verify(args) -> tuple:
    trials = _positive_int(args.trials, "--trials")
    res = run_suite(args.suite, trials, args.seed)
    out = {
        "suite": res.name,
        "seed": args.seed,
        "trials": res.trials,
        "passed": res.passed,
        "skipped_degenerate": res.skipped,
        "failures": res.failures,
        "verified": res.ok,
    }
    return out, res.ok


def _print_table(out: dict, stream=None):
    stream = stream or sys.stdout
    width = max(len(k) for k in out)
    for key, val in out.items():
        if isinstance(val, (dict, list)):
            val = json.dumps(val)
        print(f"{key.ljust(width)}  {val}", file=stream)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cfx", description="Exact sum <-> continued fraction transformations."
    )
    p.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True)

    def add_json(sp):
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)

    t = sub.add_parser("transform", help="turn a finite sum into a continued fraction")
    t.add_argument("kind", choices=sorted(TRANSFORMS))
    t.add_argument("--x", required=True, help="comma-separated x_1..x_n ('p' or 'p/q')")
    t.add_argument("--y", required=True, help="comma-separated y_1..y_n")
    add_json(t)

    i = sub.add_parser("invert", help="turn a continued fraction into a finite sum")
    i.add_argument("kind", choices=sorted(INVERSES))
    i.add_argument("--a", help="partial numerators")
    i.add_argument("--b", help="partial denominators")
    i.add_argument("--cf", help='CF JSON {"terms": [["a","b"], ...]}')
    i.add_argument("--n", required=True, help="number of sum terms (pairs/blocks)")
    add_json(i)

    s = sub.add_parser("sequence", help="generate a recurrence sequence")
    s.add_argument("--preset", choices=["a001697"])
    s.add_argument("--f", help='polynomial: "X", "X+Y", "3*X^2*Y" or JSON [[dx,dy,c],...]')
    s.add_argument("--x1")
    s.add_argument("--n", required=True)
    add_json(s)

    e = sub.add_parser("series", help="continued fraction of S, 1/S or T")
    e.add_argument("kind", choices=["S", "T", "invS", "T-contracted"])
    e.add_argument("--f", default="X")
    e.add_argument("--x1")
    e.add_argument("--h")
    e.add_argument("--n", required=True)
    add_json(e)

    v = sub.add_parser("verify", help="run a seeded randomized identity suite")
    v.add_argument("suite", choices=sorted(SUITES))
    v.add_argument("--trials", default="100")
    v.add_argument("--seed", type=int, default=0)
    add_json(v)
    return p


COMMANDS = {
    "transform": cmd_transform,
    "invert": cmd_invert,
    "sequence": cmd_sequence,
    "series": cmd_series,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        out, ok = COMMANDS[args.command](args)
    except (UsageError, PreconditionViolated) as exc:
        # unmet preconditions are input problems, not engine failures
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CfxError, ZeroDivisionError, ArithmeticError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ENGINE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        print(json.dumps(out, indent=2))
    else:
        _print_table(out)
    return EXIT_OK if ok else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
