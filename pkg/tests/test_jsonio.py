import json

import pytest
from hypothesis import given, strategies as st

from cfx.cf_core import GeneralizedCF, RegularCF
from cfx.exact_arith import X, parse_poly, rat
from cfx.jsonio import (
    cf_from_json,
    cf_to_json,
    recurrence_from_json,
    recurrence_to_json,
    regular_from_json,
    regular_to_json,
    sequence_from_json,
    sequence_to_json,
    sumspec_from_json,
    sumspec_to_json,
)
from cfx.recurrence_sequences import A001697, PolyRecurrence, a001697
from cfx.theta_transforms import SumSpec

q = st.builds(lambda p, d: rat(p, d), st.integers(-10**9, 10**9), st.integers(1, 10**9))
nzq = q.filter(lambda v: v != 0)


def test_cf_json_form():
    cf = GeneralizedCF(((1, 2), (2, rat(1, 2))))
    data = cf_to_json(cf)
    assert data == {"integer_part": "0/1", "terms": [["1/1", "2/1"], ["2/1", "1/2"]]}
    # nothing is a JSON float
    assert "." not in json.dumps(data)


@given(st.lists(st.tuples(nzq, q), max_size=8), q)
def test_cf_roundtrip(terms, ip):
    cf = GeneralizedCF(tuple(terms), ip)
    assert cf_from_json(json.loads(json.dumps(cf_to_json(cf)))) == cf


def test_cf_json_rejects():
    with pytest.raises(ValueError):
        cf_from_json({"terms": [["1", "2", "3"]]})
    with pytest.raises(ValueError):
        cf_from_json({"terms": [["0.5", "2"]]})
    with pytest.raises(ValueError):
        cf_from_json({})


def test_regular_roundtrip():
    r = RegularCF(1, (1, 1, 1, 2, 1, 8))
    data = regular_to_json(r)
    assert data == {"a0": "1", "quotients": ["1", "1", "1", "2", "1", "8"]}
    assert regular_from_json(data) == r
    with pytest.raises(ValueError):
        regular_from_json({"a0": 1.5})


def test_sumspec_roundtrip():
    s = SumSpec((rat(2), rat(7, 3)), (rat(1), rat(-4)))
    assert sumspec_from_json(sumspec_to_json(s)) == s


def test_sequence_roundtrip():
    seq = a001697(7)
    data = sequence_to_json(seq)
    assert data["values"][-1] == "11798392572168192"
    assert sequence_from_json(data) == seq


def test_recurrence_roundtrip():
    assert recurrence_from_json(recurrence_to_json(A001697)) == A001697
    fam = PolyRecurrence((X, parse_poly("X*Y + Y")), 3, "mixed")
    data = json.loads(json.dumps(recurrence_to_json(fam)))
    assert data["per_index"] is True
    assert recurrence_from_json(data) == fam
    assert recurrence_from_json({"F": "X+Y", "x1": "2"}).F == parse_poly("Y+X")
