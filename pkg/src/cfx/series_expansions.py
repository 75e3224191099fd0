"""Continued fractions for the series

    S = sum_{n>=0} h^n / x_{n+1}          T = sum_{n>=0} (-1)^n h^n / x_{n+1}

built on a recurrence sequence (x_n).  Everything is a finite truncation:
with ``truncation = n`` the S fraction has 2n terms and the T fraction
3n - 4 terms, and their values are exactly the n-term partial sums.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cf_core import (
    GeneralizedCF,
    RegularCF,
    contract_zero_denominator,
    equivalence_scale,
    to_regular,
)
from .errors import BudgetExceeded, PreconditionViolated, PrefixTooShort
from .exact_arith import Rational, exact_div, poly_eval, rat
from .recurrence_sequences import A001697, PolyRecurrence, a001697, generate

SERIES_KINDS = ("S", "T")


@dataclass(frozen=True)
class SeriesSpec:
    rec: PolyRecurrence
    h: int
    kind: str
    truncation: int

    def __post_init__(self):
        if self.kind not in SERIES_KINDS:
            raise ValueError(f"kind must be one of {SERIES_KINDS}, got {self.kind!r}")
        if int(self.h) < 1:
            raise ValueError(f"h must be a positive integer, got {self.h}")
        object.__setattr__(self, "h", int(self.h))
        minimum = 2 if self.kind == "T" else 1
        if int(self.truncation) < minimum:
            raise ValueError(f"{self.kind} needs truncation >= {minimum}")
        object.__setattr__(self, "truncation", int(self.truncation))


@dataclass(frozen=True)
class ShiftData:
    """S = t/x_N + h^N S' with N minimal such that x_{N+1} > h."""

    N: int
    t: int
    x_N: int

    @property
    def degenerate(self) -> bool:
        # N = 0: empty head, t = 0, so the leading partial denominator is 0
        return self.N == 0


def s_partial_sum(xs, h: int, m: int) -> Rational:
    """sum_{k=1}^m h^{k-1} / x_k."""
    return sum((rat(h ** (k - 1), xs[k]) for k in range(1, m + 1)), rat(0))


def t_partial_sum(xs, h: int, m: int) -> Rational:
    """sum_{k=1}^m (-1)^{k-1} h^{k-1} / x_k."""
    return sum(
        (rat((-1) ** (k - 1) * h ** (k - 1), xs[k]) for k in range(1, m + 1)), rat(0)
    )


def _require_kind(spec: SeriesSpec, kind: str):
    if spec.kind != kind:
        raise PreconditionViolated(f"expected a {kind} series, got {spec.kind}")


def _hone_tail(xs, rec: PolyRecurrence, h: int, m: int, offset: int) -> GeneralizedCF:
    """2m-term fraction for sum_{n=0}^{m-1} h^n / x_{offset+n+1}.

    The underlying sum uses X_0 = 1 and X_j = x_{offset+j}; when
    ``offset > 0`` the third partial denominator is not an integer, which is
    repaired by scaling position 3 by x_offset.
    """
    X = [1] + [xs[offset + j] for j in range(1, m + 1)]
    x1 = X[1]
    terms = [(1, x1 - h)]
    for k in range(1, m + 1):
        terms.append((h, X[k - 1]))
        if 2 * k + 1 > 2 * m:
            break
        if k == 1:
            # theta^2 X_0 = x_{offset+2} / x_{offset+1}^2
            F = rec.poly(offset)
            b = rat(poly_eval(F, xs[offset], xs[offset + 1]) + 1, xs[offset]) - 1
        else:
            j = offset + k - 1
            b = exact_div(poly_eval(rec.poly(j), xs[j], xs[j + 1]), xs[j])
        terms.append((1, b))
    cf = GeneralizedCF(tuple(terms))
    if offset and len(cf) >= 3:
        c = [1] * len(cf)
        c[2] = xs[offset]
        cf = equivalence_scale(cf, c)
    return cf


def expand_S(spec: SeriesSpec) -> GeneralizedCF:
    """2n-term fraction: a_1 = 1, b_1 = x_1 - h, a_2k = h, b_2k = x_{k-1},
    a_{2k+1} = 1, b_{2k+1} = F_{k-1}(x_{k-1}, x_k) / x_{k-1}.

    Truncating at 2m gives sum_{k=1}^m h^{k-1}/x_k.  Requires x_1 > h; use
    :func:`expand_inv_S_shifted` otherwise.
    """
    _require_kind(spec, "S")
    rec, h, n = spec.rec, spec.h, spec.truncation
    if rec.x1 <= h:
        raise PreconditionViolated(
            f"expand_S needs x_1 > h (x_1 = {rec.x1}, h = {h}); use the shifted 1/S form"
        )
    xs = generate(rec, n).values
    return _hone_tail(xs, rec, h, n, 0)


def find_shift(rec: PolyRecurrence, h: int, budget: int | None = None) -> tuple:
    """Smallest N with x_{N+1} > h, and the prefix x_0..x_{N+1}."""
    N = 0
    xs = [1, rec.x1]
    while xs[N + 1] <= h:
        N += 1
        try:
            xs = list(generate(rec, N + 1, budget).values)
        except BudgetExceeded as exc:
            raise PrefixTooShort(
                f"no x_(N+1) > {h} before exceeding the bit budget"
            ) from exc
    return N, xs


def expand_inv_S_shifted(spec: SeriesSpec, budget: int | None = None):
    """Fraction for 1/S with positive integer terms whatever x_1 and h are.

    Writes S = t/x_N + h^N S' where S' is the tail series restarted at
    x_N, and returns ``(ShiftData, cf)`` with

        cf = x_N/t + h^N x_N a'_1/b'_1 + a'_2/b'_2 + ...

    built from the 2m-term fraction of S' (m = ``spec.truncation``).  The
    truncation at 2j + 1 equals 1/(t/x_N + h^N S'_j) exactly.
    """
    _require_kind(spec, "S")
    rec, h, m = spec.rec, spec.h, spec.truncation
    N, _ = find_shift(rec, h, budget)
    try:
        xs = generate(rec, N + m, budget).values
    except BudgetExceeded as exc:
        raise PrefixTooShort(str(exc)) from exc
    x_N = xs[N]
    t = sum(h**n * exact_div(x_N, xs[n + 1]) for n in range(N))
    tail = _hone_tail(xs, rec, h, m, N)
    a1, b1 = tail.terms[0]
    terms = ((x_N, t), (h**N * a1 * x_N, b1)) + tail.terms[1:]
    return ShiftData(N, t, x_N), GeneralizedCF(terms)


def shifted_partial_sum(shift: ShiftData, xs, h: int, m: int) -> Rational:
    """t/x_N + h^N * sum_{n=0}^{m-1} h^n / x_{N+n+1}."""
    N = shift.N
    tail = sum((rat(h**n, xs[N + n + 1]) for n in range(m)), rat(0))
    return rat(shift.t, shift.x_N) + h**N * tail


def _t_terms(xs, rec: PolyRecurrence, h: int, n: int) -> list:
    length = 3 * n - 4
    x1, x2 = xs[1], xs[2]
    terms = [(1, x1), (h * x1, exact_div(x2, x1) - h)]
    if length > 2:
        terms += [(h, poly_eval(rec.poly(1), x1, x2) + 1 - x1), (x1, 1)]
    k = 2
    while 3 * k - 1 <= length:
        terms.append((h**k, h ** (k - 1) * (xs[k] - h)))
        if 3 * k <= length:
            fk = poly_eval(rec.poly(k), xs[k], xs[k + 1])
            terms.append((h ** (k - 1), exact_div(fk, xs[k]) - 1))
        if 3 * k + 1 <= length:
            terms.append((1, 1))
        k += 1
    return terms


def _check_t_start(spec: SeriesSpec):
    _require_kind(spec, "T")
    if spec.rec.x1 < spec.h:
        raise PreconditionViolated(
            f"T expansion needs x_1 >= h (x_1 = {spec.rec.x1}, h = {spec.h})"
        )


def expand_T(spec: SeriesSpec, formal: bool = False) -> GeneralizedCF:
    """(3n-4)-term fraction whose value is the n-term alternating partial sum.

    a_1 = 1, a_2 = h x_1, a_3 = h, a_4 = x_1,
    b_1 = x_1, b_2 = x_2/x_1 - h, b_3 = F_1(x_1, x_2) + 1 - x_1, b_4 = 1,
    and for k >= 2
    a_{3k-1} = h^k, a_{3k} = h^{k-1}, a_{3k+1} = 1,
    b_{3k-1} = h^{k-1}(x_k - h), b_{3k} = F_k(x_k, x_{k+1})/x_k - 1, b_{3k+1} = 1.

    When some F_k is X the denominators b_{3k} vanish; that raises unless
    ``formal=True``, in which case the formal fraction is returned as is
    (see :func:`expand_T_contracted`).
    """
    _check_t_start(spec)
    rec, h, n = spec.rec, spec.h, spec.truncation
    xs = generate(rec, n).values
    terms = _t_terms(xs, rec, h, n)
    if not formal:
        for j, (a, b) in enumerate(terms, start=1):
            if b == 0:
                k = j // 3
                raise PreconditionViolated(
                    f"b_{j} = 0 because F_{k}(x_{k}, x_{k+1}) = x_{k} "
                    "(F = X); use expand_T_contracted"
                )
            if b < 0 or a <= 0:
                raise PreconditionViolated(f"term {j} = {a}/{b} is not positive")
    return GeneralizedCF(tuple(terms))


def expand_T_contracted(spec: SeriesSpec) -> GeneralizedCF:
    """T fraction for F_k = X with every zero denominator b_{3k} removed.

    The zero blocks are contracted right to left and the numerators from
    position 5 on are rescaled to h, which gives

        1/x_1 + h x_1/(x_2/x_1 - h) + h/1 + x_1/1 + h/(x_2 - h + 1) + ...
            + h/(x_{n-2} - h + 1) + h/(x_{n-1} - h).
    """
    _check_t_start(spec)
    rec, h, n = spec.rec, spec.h, spec.truncation
    for k in range(2, n - 1):
        if not rec.poly(k).is_x():
            raise PreconditionViolated(
                f"F_{k} = {rec.poly(k)} is not X; use expand_T directly"
            )
    cf = expand_T(spec, formal=True)
    for k in range(n - 2, 1, -1):
        cf = contract_zero_denominator(cf, 3 * k)
    if len(cf) > 4:
        c = [rat(1)] * len(cf)
        for p in range(4, len(cf)):
            c[p] = h / (c[p - 1] * cf.terms[p][0])
        cf = equivalence_scale(cf, c)
    return cf


def nouv1(n: int) -> RegularCF:
    """[1; 1, x_1, 1, x_2, ..., 1, x_{n-1}] over A001697; value sum_{k=1}^n 1/x_k.

    Obtained from the S fraction with h = 1 of the sequence restarted at
    x_1 = 1 (so that x'_0 = 1, x'_1 = x_2 = 2), plus the leading 1/x_1 = 1.
    """
    if n < 1:
        raise ValueError("nouv1 needs n >= 1")
    if n == 1:
        return RegularCF(1, ())
    xs = a001697(n).values
    tail_rec = A001697.tail(1, xs[2])
    cf = expand_S(SeriesSpec(tail_rec, 1, "S", n - 1))
    return to_regular(GeneralizedCF(cf.terms, integer_part=1))


def nouv2(n: int) -> RegularCF:
    """[0; 1, 1, 1, x_1, x_2, ..., x_{n-2}, x_{n-1} - 1] over A001697.

    Its value is sum_{k=1}^n (-1)^{k-1}/x_k.
    """
    if n < 3:
        raise ValueError("nouv2 needs n >= 3")
    return to_regular(expand_T_contracted(SeriesSpec(A001697, 1, "T", n)))
