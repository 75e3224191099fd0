"""Finite sums of y_k/x_k and their continued-fraction forms.

Sequences are handled with the convention u_0 = 1, so that the ratio
operators

    theta(u, k)  = u_{k+1} / u_k
    theta2(u, k) = u_{k+2} u_k / u_{k+1}^2

are defined from k = 0.  :class:`SumSpec` stores x_1..x_n and y_1..y_n and
exposes the 0-indexed views ``xs``/``ys`` with the leading 1 in place.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cf_core import GeneralizedCF, convergents, ConvergentTable
from .errors import ZeroDenominatorConvergent
from .exact_arith import Rational, RationalLike, rat


@dataclass(frozen=True)
class SumSpec:
    x: tuple
    y: tuple

    def __post_init__(self):
        x = tuple(rat(v) for v in self.x)
        y = tuple(rat(v) for v in self.y)
        if not x:
            raise ValueError("SumSpec needs n >= 1 terms")
        if len(x) != len(y):
            raise ValueError(f"x has {len(x)} entries but y has {len(y)}")
        for name, seq in (("x", x), ("y", y)):
            for k, v in enumerate(seq, start=1):
                if v == 0:
                    raise ValueError(f"{name}_{k} is zero")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @property
    def n(self) -> int:
        return len(self.x)

    @property
    def xs(self) -> tuple:
        """x_0 = 1, x_1, ..., x_n."""
        return (rat(1),) + self.x

    @property
    def ys(self) -> tuple:
        return (rat(1),) + self.y


def theta(u: Sequence[RationalLike], k: int) -> Rational:
    """u_{k+1}/u_k for a 0-indexed sequence ``u`` (``u[0]`` is u_0)."""
    if not 0 <= k <= len(u) - 2:
        raise IndexError(f"theta index {k} outside 0..{len(u) - 2}")
    return rat(u[k + 1]) / rat(u[k])


def theta2(u: Sequence[RationalLike], k: int) -> Rational:
    if not 0 <= k <= len(u) - 3:
        raise IndexError(f"theta2 index {k} outside 0..{len(u) - 3}")
    mid = rat(u[k + 1])
    return rat(u[k + 2]) * rat(u[k]) / (mid * mid)


def sum_sigma(s: SumSpec) -> Rational:
    return sum((y / x for x, y in zip(s.x, s.y)), rat(0))


def sum_tau(s: SumSpec) -> Rational:
    total = rat(0)
    for k, (x, y) in enumerate(zip(s.x, s.y)):
        total += y / x if k % 2 == 0 else -y / x
    return total


def euler_cf(s: SumSpec) -> GeneralizedCF:
    """Length-n fraction whose value is the alternating sum tau_n.

    a_1 = y_1, b_1 = x_1 and for k >= 2
    a_k = theta y_{k-1} * theta x_{k-2},  b_k = theta x_{k-1} - theta y_{k-1}.
    """
    xs, ys = s.xs, s.ys
    terms = [(s.y[0], s.x[0])]
    for k in range(2, s.n + 1):
        ty = theta(ys, k - 1)
        terms.append((ty * theta(xs, k - 2), theta(xs, k - 1) - ty))
    return GeneralizedCF(tuple(terms))


def hone_cf(s: SumSpec) -> GeneralizedCF:
    """Length-2n fraction whose value is sigma_n.

    a_1 = y_1, b_1 = x_1 - y_1 and for k >= 1
    a_{2k} = theta y_{k-1},    b_{2k} = x_{k-1},
    a_{2k+1} = theta2 y_{k-1}, b_{2k+1} = (theta2 x_{k-1} - theta2 y_{k-1}) / x_{k-1}.
    """
    xs, ys = s.xs, s.ys
    n = s.n
    terms = [(ys[1], xs[1] - ys[1])]
    for k in range(1, n + 1):
        terms.append((theta(ys, k - 1), xs[k - 1]))
        if 2 * k + 1 <= 2 * n:
            t2y = theta2(ys, k - 1)
            terms.append((t2y, (theta2(xs, k - 1) - t2y) / xs[k - 1]))
    return GeneralizedCF(tuple(terms))


def varona_cf(s: SumSpec) -> GeneralizedCF:
    """Length-(3n-4) fraction whose value is tau_n (n >= 2)."""
    n = s.n
    if n < 2:
        raise ValueError("varona_cf needs n >= 2")
    xs, ys = s.xs, s.ys
    length = 3 * n - 4
    x1, y1 = xs[1], ys[1]
    terms = [
        (y1 * y1, x1 * y1),
        (x1 * ys[2], theta(xs, 1) - theta(ys, 1)),
    ]
    if length > 2:
        terms += [(theta(ys, 2), theta2(xs, 1) - x1), (x1, 1)]
    k = 2
    while 3 * k - 1 <= length:
        block = [
            (ys[k + 1], xs[k] * ys[k] - ys[k + 1]),
        ]
        if 3 * k <= length:
            t2y = theta2(ys, k)
            block.append((ys[k] * t2y, (theta2(xs, k) - t2y) / xs[k] - 1))
        if 3 * k + 1 <= length:
            block.append((1, 1))
        terms.extend(block)
        k += 1
    return GeneralizedCF(tuple(terms))


def varona_aux_cf(s: SumSpec) -> GeneralizedCF:
    """Auxiliary length-(3n-4) fraction for tau_n used in the Varona proof.

    It differs from :func:`varona_cf` only at positions 3 and 4: scaling
    position 3 by x_1 (an equivalence transformation) turns one into the
    other.
    """
    n = s.n
    if n < 2:
        raise ValueError("varona_aux_cf needs n >= 2")
    xs, ys = s.xs, s.ys
    length = 3 * n - 4
    x1 = xs[1]
    terms = [
        (ys[1] * ys[1], x1 * ys[1]),
        (x1 * ys[2], theta(xs, 1) - theta(ys, 1)),
    ]
    if length >= 3:
        terms.append((theta(ys, 2) / x1, theta(xs, 2) / xs[2] - 1))
    k = 1
    while 3 * k + 1 <= length:
        terms.append((1, 1))
        if 3 * k + 2 <= length:
            terms.append((ys[k + 2], xs[k + 1] * ys[k + 1] - ys[k + 2]))
        if 3 * k + 3 <= length:
            t2y = theta2(ys, k + 1)
            terms.append(
                (ys[k + 1] * t2y, (theta2(xs, k + 1) - t2y) / xs[k + 1] - 1)
            )
        k += 1
    return GeneralizedCF(tuple(terms))


def _table(cf: GeneralizedCF, m: int) -> ConvergentTable:
    if m > len(cf):
        raise ValueError(f"fraction has {len(cf)} terms, {m} required")
    return convergents(cf, m)


def _nonzero(Q, indices):
    for k in sorted(set(indices)):
        if Q[k] == 0:
            raise ZeroDenominatorConvergent(k)


def cf_to_sum_euler(cf: GeneralizedCF, n: int) -> list:
    """Terms (-1)^k a_1...a_{k+1} / (Q_{k+1} Q_k), k = 0..n-1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    Q = _table(cf, n).Q
    _nonzero(Q, range(n + 1))
    out = []
    prod = rat(1)
    for k in range(n):
        prod *= cf.terms[k][0]
        term = prod / (Q[k + 1] * Q[k])
        out.append(term if k % 2 == 0 else -term)
    return out


def cf_to_sum_hone(cf: GeneralizedCF, n: int) -> list:
    """Terms a_1...a_{2k+1} b_{2k+2} / (Q_{2k} Q_{2k+2}), k = 0..n-1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    Q = _table(cf, 2 * n).Q
    _nonzero(Q, range(0, 2 * n + 1, 2))
    a = cf.numerators
    out = []
    prod = rat(1)
    for k in range(n):
        # prod = a_1 ... a_{2k+1}
        if k == 0:
            prod = a[0]
        else:
            prod *= a[2 * k - 1] * a[2 * k]
        out.append(prod * cf.terms[2 * k + 1][1] / (Q[2 * k] * Q[2 * k + 2]))
    return out


def cf_to_sum_varona(cf: GeneralizedCF, n: int) -> list:
    """Terms a_1/Q_1, -a_1 a_2/(Q_1 Q_2), then for k = 1..n-1

        (-1)^{k-1} a_1...a_{3k} (b_{3k+1} b_{3k+2} + a_{3k+2}) / (Q_{3k-1} Q_{3k+2}).

    They add up to the convergent of index 3n-1.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    Q = _table(cf, 3 * n - 1).Q
    needed = [1, 2]
    for k in range(1, n):
        needed += [3 * k - 1, 3 * k + 2]
    _nonzero(Q, needed)
    a, b = cf.numerators, cf.denominators
    out = [a[0] / Q[1], -a[0] * a[1] / (Q[1] * Q[2])]
    prod = a[0] * a[1]
    for k in range(1, n):
        # a, b are 0-indexed: a[i] is a_{i+1}
        prod *= a[3 * k - 1]
        if k > 1:
            prod *= a[3 * k - 3] * a[3 * k - 2]
        term = prod * (b[3 * k] * b[3 * k + 1] + a[3 * k + 1]) / (Q[3 * k - 1] * Q[3 * k + 2])
        out.append(term if k % 2 == 1 else -term)
    return out
