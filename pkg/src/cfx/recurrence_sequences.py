"""Integer sequences defined by

    x_{n+2} x_n = x_{n+1}^2 (F_n(x_n, x_{n+1}) + 1),   x_0 = 1, x_1 > 0,

where each F_n has non-negative integer coefficients and F_n(0, 0) = 0.
Such sequences consist of positive integers with x_n | x_{n+1} and grow
doubly exponentially, so generation is guarded by a bit-size budget.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Sequence, Union

from .errors import BudgetExceeded
from .exact_arith import X, BivarPoly, exact_div, poly_eval

DEFAULT_BIT_BUDGET = 2**20
BUDGET_ENV = "CFX_BIT_BUDGET"


def bit_budget(override: int | None = None) -> int:
    if override is not None:
        return int(override)
    env = os.environ.get(BUDGET_ENV)
    if env:
        return int(env)
    return DEFAULT_BIT_BUDGET


@dataclass(frozen=True)
class PolyRecurrence:
    """Either one polynomial used at every index or an explicit list F_0, F_1, ..."""

    F: Union[BivarPoly, tuple]
    x1: int
    description: str = ""

    def __post_init__(self):
        if isinstance(self.F, (list, tuple)):
            polys = tuple(self.F)
            if not polys or not all(isinstance(p, BivarPoly) for p in polys):
                raise TypeError("per-index family must be a non-empty list of BivarPoly")
            object.__setattr__(self, "F", polys)
        elif not isinstance(self.F, BivarPoly):
            raise TypeError("F must be a BivarPoly or a list of them")
        if int(self.x1) < 1:
            raise ValueError(f"x1 must be a positive integer, got {self.x1}")
        object.__setattr__(self, "x1", int(self.x1))

    @property
    def stationary(self) -> bool:
        return isinstance(self.F, BivarPoly)

    def poly(self, n: int) -> BivarPoly:
        if self.stationary:
            return self.F
        if not 0 <= n < len(self.F):
            raise IndexError(f"F_{n} not given (family has {len(self.F)} members)")
        return self.F[n]

    def tail(self, N: int, x1: int) -> "PolyRecurrence":
        """Recurrence for x'_n = x_{n+N}; a valid start only when x_N = 1."""
        F = self.F if self.stationary else self.F[N:]
        return PolyRecurrence(F, x1, self.description)


A001697 = PolyRecurrence(X, 1, "A001697")


@dataclass(frozen=True)
class SequencePrefix:
    values: tuple
    name: str = ""

    def __len__(self):
        return len(self.values)

    def __getitem__(self, n):
        return self.values[n]

    @property
    def N(self) -> int:
        return len(self.values) - 1


def _guard(value: int, index: int, budget: int):
    bits = value.bit_length()
    if bits > budget:
        raise BudgetExceeded(index, bits, budget)


def generate(rec: PolyRecurrence, N: int, budget: int | None = None) -> SequencePrefix:
    """x_0, ..., x_N from the recurrence.

    Divisibility is proven for valid F, so :class:`NonDivisible` escaping
    from here indicates a bug, not bad input.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    budget = bit_budget(budget)
    xs = [1, rec.x1]
    _guard(rec.x1, 1, budget)
    for n in range(N - 1):
        a, b = xs[n], xs[n + 1]
        nxt = exact_div(b * b * (poly_eval(rec.poly(n), a, b) + 1), a)
        _guard(nxt, n + 2, budget)
        xs.append(nxt)
    return SequencePrefix(tuple(xs), rec.description)


def a001697(N: int, budget: int | None = None) -> SequencePrefix:
    """1, 1, 2, 8, 96, ... via x_{n+1} = x_n (x_0 + ... + x_n)."""
    if N < 1:
        raise ValueError("N must be >= 1")
    budget = bit_budget(budget)
    xs = [1, 1]
    running = 2
    for n in range(1, N):
        nxt = xs[n] * running
        _guard(nxt, n + 1, budget)
        xs.append(nxt)
        running += nxt
    return SequencePrefix(tuple(xs), "A001697")


@dataclass(frozen=True)
class Check:
    name: str
    index: int
    ok: bool
    detail: str = ""


@dataclass
class InvariantReport:
    checks: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if not c.ok]

    def summary(self) -> dict:
        out: dict[str, list] = {}
        for c in self.checks:
            tally = out.setdefault(c.name, [0, 0])
            tally[0 if c.ok else 1] += 1
        return {name: {"passed": p, "failed": f} for name, (p, f) in out.items()}


def check_invariants(seq: SequencePrefix | Sequence[int], rec: PolyRecurrence) -> InvariantReport:
    """Check positivity, divisibility, the recurrence itself and the growth bounds.

    Never raises on a bad sequence; every check is recorded with its index.
    Divisibility ``x_{n-1} | x_n`` is reported at index n.
    """
    xs = [int(v) for v in (seq.values if isinstance(seq, SequencePrefix) else seq)]
    report = InvariantReport()
    add = report.checks.append
    add(Check("start", 0, xs[:1] == [1], "x_0 = 1"))
    for n, v in enumerate(xs):
        add(Check("positive", n, v > 0))
    for n in range(1, len(xs)):
        prev, cur = xs[n - 1], xs[n]
        add(Check("divides_next", n, prev > 0 and cur % prev == 0, f"x_{n-1} | x_{n}"))
    for n in range(len(xs) - 1):
        a, b = xs[n], xs[n + 1]
        try:
            F = rec.poly(n)
        except IndexError:
            break
        f_val = poly_eval(F, a, b)
        add(Check("divides_F", n, a > 0 and f_val % a == 0, f"x_{n} | F_{n}(x_{n}, x_{n+1})"))
        if n + 2 < len(xs):
            c = xs[n + 2]
            add(Check("recurrence", n + 2, c * a == b * b * (f_val + 1)))
            add(Check("growth", n + 2, c > b * b, f"x_{n+2} > x_{n+1}^2"))
    if len(xs) > 2:
        x2 = xs[2]
        for n in range(2, len(xs)):
            e = 2 ** (n - 2)
            # x >= 2^e  <=>  bit_length(x) > e
            add(Check("min_bound", n, xs[n] > 0 and xs[n].bit_length() > e, f"x_{n} >= 2^(2^{n-2})"))
            if x2 < 1 or (x2.bit_length() - 1) * e >= xs[n].bit_length():
                ok = x2 == 1 and xs[n] >= 1
            else:
                ok = xs[n] >= x2**e
            add(Check("min_bound_x2", n, ok, f"x_{n} >= x_2^(2^{n-2})"))
    return report
