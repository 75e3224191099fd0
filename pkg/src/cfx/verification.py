"""Seeded randomized identity suites behind ``cfx verify``.

Every identity here is an equality of rational functions, so checking it
exactly at many random rational points is a complete test for each fixed
size.  Substitutions that make a needed Q_k vanish are degenerate and are
resampled (and counted as skipped), not failed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .cf_core import GeneralizedCF, contract_zero_denominator, convergents, eval_cf
from .errors import ZeroDenominatorConvergent
from .exact_arith import X, BivarPoly, product, rat
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
    theta2,
    varona_aux_cf,
    varona_cf,
)

MAX_RESAMPLE = 200
MAX_REPORTED_FAILURES = 10


@dataclass
class SuiteResult:
    name: str
    trials: int = 0
    passed: int = 0
    skipped: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.trials > 0 and self.passed == self.trials

    def record(self, ok: bool, detail: str = ""):
        self.trials += 1
        if ok:
            self.passed += 1
        elif len(self.failures) < MAX_REPORTED_FAILURES:
            self.failures.append(detail)


def random_sumspec(rng: random.Random, n: int, lo: int = 1, hi: int = 100) -> SumSpec:
    return SumSpec(
        tuple(rng.randint(lo, hi) for _ in range(n)),
        tuple(rng.randint(lo, hi) for _ in range(n)),
    )


def random_rational(rng: random.Random, size: int = 20) -> object:
    """Nonzero signed rational with numerator and denominator up to ``size``."""
    num = rng.choice([-1, 1]) * rng.randint(1, size)
    return rat(num, rng.randint(1, size))


def random_cf(rng: random.Random, length: int, size: int = 20) -> GeneralizedCF:
    return GeneralizedCF(
        tuple((random_rational(rng, size), random_rational(rng, size)) for _ in range(length))
    )


def random_poly(rng: random.Random, max_dx: int = 2, max_dy: int = 2, max_terms: int = 3) -> BivarPoly:
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        dx, dy = 0, 0
        while dx == dy == 0:
            dx, dy = rng.randint(0, max_dx), rng.randint(0, max_dy)
        terms.append((dx, dy, rng.randint(1, 3)))
    return BivarPoly(tuple(terms))


def _retry(rng, suite: SuiteResult, attempt):
    """Run ``attempt(rng)`` until it is not degenerate; returns its result or None."""
    for _ in range(MAX_RESAMPLE):
        try:
            return attempt(rng)
        except ZeroDenominatorConvergent:
            suite.skipped += 1
    return None


def suite_delta(trials: int, rng: random.Random) -> SuiteResult:
    res = SuiteResult("delta")
    for _ in range(trials):
        cf = random_cf(rng, rng.randint(1, 12))
        t = convergents(cf)
        a = cf.numerators
        ok = all(
            t.P[k + 1] * t.Q[k] - t.P[k] * t.Q[k + 1] == (-1) ** k * product(a[: k + 1])
            for k in range(len(cf))
        )
        res.record(ok, f"determinant identity failed for {cf}")
    return res


def _transform_suite(name, transform, oracle, min_n, trials, rng) -> SuiteResult:
    res = SuiteResult(name)
    ns = list(range(min_n, 13))
    for i in range(trials):
        n = ns[i % len(ns)]

        def attempt(r):
            s = random_sumspec(r, n)
            return s, eval_cf(transform(s)) == oracle(s)

        out = _retry(rng, res, attempt)
        if out is None:
            res.record(False, f"n={n}: no non-degenerate sample")
        else:
            res.record(out[1], f"n={n}: mismatch for {out[0]}")
    return res


def suite_euler(trials, rng):
    return _transform_suite("euler", euler_cf, sum_tau, 1, trials, rng)


def suite_hone(trials, rng):
    return _transform_suite("hone", hone_cf, sum_sigma, 1, trials, rng)


def suite_varona(trials, rng):
    res = _transform_suite("varona", varona_cf, sum_tau, 2, trials, rng)
    aux = _transform_suite("varona-aux", varona_aux_cf, sum_tau, 2, trials, rng)
    res.trials += aux.trials
    res.passed += aux.passed
    res.skipped += aux.skipped
    res.failures += aux.failures
    return res


def suite_lemmas(trials, rng):
    res = SuiteResult("lemmas")
    lemmas = [
        ("euler", lambda n: n, cf_to_sum_euler, lambda n: n),
        ("hone", lambda n: 2 * n, cf_to_sum_hone, lambda n: 2 * n),
        ("varona", lambda n: 3 * n - 1, cf_to_sum_varona, lambda n: 3 * n - 1),
    ]
    for i in range(trials):
        label, length, to_sum, depth = lemmas[i % 3]
        n = rng.randint(1, 8)

        def attempt(r):
            cf = random_cf(r, length(n))
            return cf, sum(to_sum(cf, n), rat(0)) == eval_cf(cf, depth(n))

        out = _retry(rng, res, attempt)
        if out is None:
            res.record(False, f"{label} n={n}: no non-degenerate sample")
        else:
            res.record(out[1], f"{label} n={n}: sum != value for {out[0]}")
    return res


def suite_sequences(trials, rng):
    res = SuiteResult("sequences")
    for i in range(trials):
        if i == 0:
            rec = A001697
            N = 8
        else:
            rec = PolyRecurrence(random_poly(rng), rng.randint(1, 5))
            N = rng.randint(2, 8)
        seq = generate(rec, N)
        report = check_invariants(seq, rec)
        xs = seq.values
        closure = all(
            theta2(xs, n) == rec.poly(n)(xs[n], xs[n + 1]) + 1 for n in range(N - 1)
        )
        ok = report.ok and closure
        if rec is A001697:
            ok = ok and a001697(N).values == xs
        res.record(ok, f"{rec.F} x1={rec.x1}: {report.failures()[:3]} closure={closure}")
    return res


def suite_series(trials, rng):
    res = SuiteResult("series")
    depth = 8
    for i in range(trials):
        kind = ("S", "T", "invS", "T-contracted")[i % 4]
        if kind == "T-contracted":
            F = X
        else:
            F = random_poly(rng, max_dx=2, max_dy=1)
            while kind == "T" and F.is_x():
                F = random_poly(rng, max_dx=2, max_dy=1)
        x1 = rng.randint(2, 6)
        ok = True
        if kind == "S":
            h = rng.randint(1, x1 - 1)
        elif kind == "invS":
            h = rng.randint(1, 20)
        else:
            h = rng.randint(1, x1)
        rec = PolyRecurrence(F, x1)
        xs = generate(rec, depth).values
        if kind == "S":
            cf = expand_S(SeriesSpec(rec, h, "S", depth))
            ok = all(eval_cf(cf, 2 * m) == s_partial_sum(xs, h, m) for m in range(1, depth + 1))
            ok = ok and _all_positive_integers(cf)
        elif kind == "T":
            cf = expand_T(SeriesSpec(rec, h, "T", depth))
            ok = all(eval_cf(cf, 3 * m - 4) == t_partial_sum(xs, h, m) for m in range(2, depth + 1))
            ok = ok and _all_positive_integers(cf)
        elif kind == "invS":
            shift, cf = expand_inv_S_shifted(SeriesSpec(rec, h, "S", depth))
            xs = generate(rec, depth + shift.N).values
            ok = all(
                eval_cf(cf, 2 * j + 1) == 1 / shifted_partial_sum(shift, xs, h, j)
                for j in range(0 if shift.t else 1, depth + 1)
            )
            ok = ok and (shift.degenerate or _all_positive_integers(cf))
        else:
            for n in range(2, depth + 1):
                spec = SeriesSpec(rec, h, "T", n)
                contracted = expand_T_contracted(spec)
                formal = expand_T(spec, formal=True)
                ok = ok and eval_cf(contracted) == eval_cf(formal) == t_partial_sum(xs, h, n)
                ok = ok and _all_positive_integers(contracted)
        res.record(ok, f"{kind}: F={F} x1={x1} h={h}")
    return res


def _all_positive_integers(cf: GeneralizedCF) -> bool:
    return all(
        v.denominator == 1 and v > 0 for pair in cf.terms for v in pair
    )


def suite_contraction(trials, rng):
    """Random formal fractions with one zero denominator keep their value."""
    res = SuiteResult("contraction")
    for _ in range(trials):

        def attempt(r):
            length = r.randint(3, 10)
            j = r.randint(2, length - 1)
            terms = list(random_cf(r, length).terms)
            terms[j - 1] = (terms[j - 1][0], rat(0))
            cf = GeneralizedCF(tuple(terms))
            return cf, eval_cf(cf) == eval_cf(contract_zero_denominator(cf, j))

        out = _retry(rng, res, attempt)
        res.record(out is not None and out[1], f"contraction changed value: {out}")
    return res


SUITES = {
    "delta": suite_delta,
    "euler": suite_euler,
    "hone": suite_hone,
    "varona": suite_varona,
    "lemmas": suite_lemmas,
    "sequences": suite_sequences,
    "series": suite_series,
    "contraction": suite_contraction,
}


def run_suite(name: str, trials: int, seed: int = 0) -> SuiteResult:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    return SUITES[name](trials, random.Random(seed))
