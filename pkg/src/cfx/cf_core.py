"""Finite generalized continued fractions

    a_1/(b_1 + a_2/(b_2 + ... + a_m/b_m))

evaluated through the three-term recurrence for the convergents P_k/Q_k.
All indices in this module are 1-based, matching the usual subscripts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import NotRegular, ZeroDenominatorConvergent
from .exact_arith import Rational, RationalLike, rat


@dataclass(frozen=True)
class GeneralizedCF:
    """Finite list of ``(a_k, b_k)`` pairs plus a display integer part.

    Zero partial denominators are allowed (formal fractions); zero partial
    numerators are not, since they silently truncate the fraction.
    """

    terms: tuple
    integer_part: Rational = rat(0)

    def __post_init__(self):
        terms = tuple((rat(a), rat(b)) for a, b in self.terms)
        for k, (a, _) in enumerate(terms, start=1):
            if a == 0:
                raise ValueError(f"partial numerator a_{k} is zero")
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "integer_part", rat(self.integer_part))

    def __len__(self):
        return len(self.terms)

    def a(self, k: int) -> Rational:
        return self.terms[_check_index(k, len(self.terms))][0]

    def b(self, k: int) -> Rational:
        return self.terms[_check_index(k, len(self.terms))][1]

    @property
    def numerators(self) -> list:
        return [a for a, _ in self.terms]

    @property
    def denominators(self) -> list:
        return [b for _, b in self.terms]

    def truncate(self, m: int) -> "GeneralizedCF":
        if not 0 <= m <= len(self.terms):
            raise IndexError(f"truncation {m} outside 0..{len(self.terms)}")
        return GeneralizedCF(self.terms[:m], self.integer_part)

    def __str__(self):
        body = " + ".join(f"{a}/{b}" for a, b in self.terms)
        if self.integer_part:
            return f"{self.integer_part} + {body}"
        return body


def _check_index(k: int, length: int) -> int:
    if not 1 <= k <= length:
        raise IndexError(f"index {k} outside 1..{length}")
    return k - 1


@dataclass(frozen=True)
class ConvergentTable:
    """``P[k]``, ``Q[k]`` for k = 0..m (``P[0] = 0``, ``Q[0] = 1``)."""

    P: tuple
    Q: tuple

    @property
    def m(self) -> int:
        return len(self.P) - 1

    def value(self, k: int) -> Optional[Rational]:
        """P_k/Q_k, or ``None`` when Q_k = 0 (formally infinite convergent)."""
        q = self.Q[k]
        if q == 0:
            return None
        return self.P[k] / q

    def values(self) -> list:
        return [self.value(k) for k in range(1, self.m + 1)]


def convergents(cf: GeneralizedCF, m: int | None = None) -> ConvergentTable:
    """Run P_{k+2} = b_{k+2} P_{k+1} + a_{k+2} P_k (same for Q) up to index m."""
    if m is None:
        m = len(cf)
    if not 1 <= m <= len(cf):
        raise IndexError(f"m = {m} outside 1..{len(cf)}")
    # P_{-1} = 1, Q_{-1} = 0 seeds P_1 = a_1, Q_1 = b_1
    p_prev, q_prev = rat(1), rat(0)
    p, q = rat(0), rat(1)
    P, Q = [p], [q]
    for a, b in cf.terms[:m]:
        p, p_prev = b * p + a * p_prev, p
        q, q_prev = b * q + a * q_prev, q
        P.append(p)
        Q.append(q)
    return ConvergentTable(tuple(P), tuple(Q))


def eval_cf(cf: GeneralizedCF, m: int | None = None) -> Rational:
    """Exact value of the m-th convergent (plus ``cf.integer_part``)."""
    table = convergents(cf, m)
    v = table.value(table.m)
    if v is None:
        raise ZeroDenominatorConvergent(table.m)
    return cf.integer_part + v


def equivalence_scale(cf: GeneralizedCF, c: Sequence[RationalLike]) -> GeneralizedCF:
    """Apply a'_k = c_k c_{k-1} a_k, b'_k = c_k b_k with c_0 = 1.

    Every convergent value is preserved; P_k and Q_k each pick up the
    factor c_1 ... c_k.
    """
    if len(c) != len(cf):
        raise ValueError(f"need {len(cf)} scale factors, got {len(c)}")
    out = []
    prev = rat(1)
    for k, ((a, b), ck) in enumerate(zip(cf.terms, c), start=1):
        ck = rat(ck)
        if ck == 0:
            raise ValueError(f"scale factor c_{k} is zero")
        out.append((ck * prev * a, ck * b))
        prev = ck
    return GeneralizedCF(tuple(out), cf.integer_part)


def contract_zero_denominator(cf: GeneralizedCF, j: int) -> GeneralizedCF:
    """Remove the zero partial denominator b_j by merging terms j-1, j, j+1.

    ``(a_{j-1}, b_{j-1}) (a_j, 0) (a_{j+1}, b_{j+1}) (A, B)`` becomes
    ``(a_{j-1}, b_{j-1} + a_j b_{j+1} / a_{j+1}) (a_j A / a_{j+1}, B)``.
    The result is two terms shorter; convergent k+2 of the input equals
    convergent k of the output for k >= j-1.
    """
    n = len(cf)
    if not (2 <= j and j + 1 <= n):
        raise IndexError(f"contraction index j = {j} needs 2 <= j <= {n - 1}")
    if cf.b(j) != 0:
        raise ValueError(f"b_{j} = {cf.b(j)} is not zero")
    a_prev, b_prev = cf.terms[j - 2]
    a_j = cf.terms[j - 1][0]
    a_next, b_next = cf.terms[j]
    ratio = a_j / a_next
    merged = [(a_prev, b_prev + ratio * b_next)]
    if j + 2 <= n:
        A, B = cf.terms[j + 1]
        merged.append((ratio * A, B))
    terms = cf.terms[: j - 2] + tuple(merged) + cf.terms[j + 2 :]
    return GeneralizedCF(terms, cf.integer_part)


@dataclass(frozen=True)
class RegularCF:
    """``[a0; q_1, q_2, ...]`` with positive integer partial quotients."""

    integer_part: int
    partial_quotients: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "integer_part", int(self.integer_part))
        qs = tuple(int(q) for q in self.partial_quotients)
        for k, q in enumerate(qs, start=1):
            if q < 1:
                raise ValueError(f"partial quotient {k} is {q}, expected >= 1")
        object.__setattr__(self, "partial_quotients", qs)

    def to_generalized(self) -> GeneralizedCF:
        return GeneralizedCF(
            tuple((1, q) for q in self.partial_quotients), self.integer_part
        )

    def value(self) -> Rational:
        if not self.partial_quotients:
            return rat(self.integer_part)
        return eval_cf(self.to_generalized())

    def __str__(self):
        return f"[{self.integer_part}; {', '.join(map(str, self.partial_quotients))}]"


def to_regular(cf: GeneralizedCF) -> RegularCF:
    """Read ``cf`` as a regular continued fraction.

    Every partial numerator must already be 1 and every partial
    denominator a positive integer; the first offending index is reported
    through :class:`NotRegular`.
    """
    if cf.integer_part.denominator != 1:
        raise NotRegular(0, f"integer part {cf.integer_part} is not an integer")
    quotients = []
    for k, (a, b) in enumerate(cf.terms, start=1):
        if a != 1:
            raise NotRegular(k, f"partial numerator {a} != 1")
        if b.denominator != 1 or b < 1:
            raise NotRegular(k, f"partial denominator {b} is not a positive integer")
        quotients.append(int(b))
    return RegularCF(int(cf.integer_part), tuple(quotients))
