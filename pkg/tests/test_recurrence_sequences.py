import pytest
from hypothesis import given, settings, strategies as st

from cfx.errors import BudgetExceeded
from cfx.exact_arith import X, BivarPoly, parse_poly
from cfx.recurrence_sequences import (
    A001697,
    BUDGET_ENV,
    PolyRecurrence,
    SequencePrefix,
    a001697,
    bit_budget,
    check_invariants,
    generate,
)

from oracles import A001697_TERMS, hone_sequence

polys = st.lists(
    st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(1, 3)).filter(
        lambda t: t[0] or t[1]
    ),
    min_size=1,
    max_size=3,
).map(lambda ts: BivarPoly(tuple(ts)))


def test_a001697_prefix():
    assert generate(A001697, 4).values == (1, 1, 2, 8, 96)
    assert a001697(4).values == (1, 1, 2, 8, 96)
    assert generate(A001697, 8).values == A001697_TERMS
    assert a001697(8).values == A001697_TERMS


def test_n_equals_one():
    assert generate(PolyRecurrence(parse_poly("X+Y"), 1), 1).values == (1, 1)
    assert a001697(1).values == (1, 1)
    with pytest.raises(ValueError):
        generate(A001697, 0)


def test_other_start():
    assert generate(PolyRecurrence(X, 3), 3).values == (1, 3, 18, 432)


@settings(max_examples=60)
@given(polys, st.integers(1, 6), st.integers(1, 6))
def test_generate_matches_direct_loop(F, x1, N):
    seq = generate(PolyRecurrence(F, x1), N)
    assert list(seq.values) == hone_sequence(F.terms, x1, N)
    report = check_invariants(seq, PolyRecurrence(F, x1))
    assert report.ok, report.failures()


def test_invariant_hand_check():
    report = check_invariants((1, 1, 2, 8, 96), A001697)
    assert report.ok
    names = set(report.summary())
    assert {"start", "positive", "divides_next", "divides_F", "recurrence", "growth", "min_bound"} <= names


def test_tampered_sequence_reports_index():
    report = check_invariants((1, 1, 2, 7, 96), A001697)
    assert not report.ok
    div = [c for c in report.failures() if c.name == "divides_next"]
    assert div and div[0].index == 3


def test_bad_start_reported():
    report = check_invariants(SequencePrefix((2, 2, 8)), A001697)
    assert any(c.name == "start" for c in report.failures())


def test_minimum_bound_at_two():
    for F in (X, parse_poly("Y"), parse_poly("X*Y + 2*Y^2")):
        for x1 in (1, 2, 5):
            assert generate(PolyRecurrence(F, x1), 2)[2] >= 2


def test_per_index_family():
    fam = (X, parse_poly("Y"), X)
    rec = PolyRecurrence(fam, 2)
    seq = generate(rec, 3)
    # x2 = 4 * (F_0(1, 2) + 1) = 8, x3 = 64 * (F_1(2, 8) + 1) / 2 = 288
    assert seq.values == (1, 2, 8, 288)
    assert check_invariants(seq, rec).ok
    with pytest.raises(IndexError):
        generate(rec, 5)
    assert not rec.stationary and A001697.stationary


def test_tail_restarts():
    tail = A001697.tail(1, 2)
    assert generate(tail, 3).values == (1, 2, 8, 96)


def test_recurrence_validation():
    with pytest.raises(ValueError):
        PolyRecurrence(X, 0)
    with pytest.raises(TypeError):
        PolyRecurrence("X", 1)
    with pytest.raises(TypeError):
        PolyRecurrence((), 1)


def test_budget_guard(monkeypatch):
    with pytest.raises(BudgetExceeded) as exc:
        a001697(50)
    assert exc.value.index > 8
    with pytest.raises(BudgetExceeded):
        generate(A001697, 8, budget=64)
    monkeypatch.setenv(BUDGET_ENV, "32")
    assert bit_budget() == 32
    assert bit_budget(10) == 10
    with pytest.raises(BudgetExceeded):
        generate(A001697, 8)


def test_growth_and_bound_on_a001697():
    xs = A001697_TERMS
    for n in range(2, len(xs)):
        assert xs[n] >= 2 ** (2 ** (n - 2))
    for n in range(len(xs) - 2):
        assert xs[n + 2] > xs[n + 1] ** 2
