"""JSON forms.  Numbers are always exact strings, never JSON floats.

Rationals are written ``"num/den"``; integers as plain decimal strings.
"""

from __future__ import annotations

from .cf_core import GeneralizedCF, RegularCF
from .exact_arith import BivarPoly, format_integer, format_rational, parse_poly, rat
from .recurrence_sequences import PolyRecurrence, SequencePrefix
from .theta_transforms import SumSpec


def _int(text) -> int:
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise ValueError(f"expected an integer string, got {text!r}")
    return int(text)


def cf_to_json(cf: GeneralizedCF) -> dict:
    return {
        "integer_part": format_rational(cf.integer_part),
        "terms": [[format_rational(a), format_rational(b)] for a, b in cf.terms],
    }


def cf_from_json(data: dict) -> GeneralizedCF:
    terms = data.get("terms")
    if not isinstance(terms, list) or not all(
        isinstance(t, list) and len(t) == 2 for t in terms
    ):
        raise ValueError("CF JSON needs 'terms': [[a, b], ...]")
    return GeneralizedCF(
        tuple((rat(str(a)), rat(str(b))) for a, b in terms),
        rat(str(data.get("integer_part", "0"))),
    )


def regular_to_json(r: RegularCF) -> dict:
    return {
        "a0": format_integer(r.integer_part),
        "quotients": [format_integer(q) for q in r.partial_quotients],
    }


def regular_from_json(data: dict) -> RegularCF:
    return RegularCF(_int(data["a0"]), tuple(_int(q) for q in data.get("quotients", [])))


def sumspec_to_json(s: SumSpec) -> dict:
    return {"x": [format_rational(v) for v in s.x], "y": [format_rational(v) for v in s.y]}


def sumspec_from_json(data: dict) -> SumSpec:
    return SumSpec(tuple(rat(str(v)) for v in data["x"]), tuple(rat(str(v)) for v in data["y"]))


def sequence_to_json(seq: SequencePrefix) -> dict:
    return {"name": seq.name, "values": [format_integer(v) for v in seq.values]}


def sequence_from_json(data: dict) -> SequencePrefix:
    return SequencePrefix(tuple(_int(v) for v in data["values"]), data.get("name", ""))


def poly_from_json(data) -> BivarPoly:
    if isinstance(data, str):
        return parse_poly(data)
    return BivarPoly.from_json(data)


def recurrence_to_json(rec: PolyRecurrence) -> dict:
    F = rec.F.to_json() if rec.stationary else [p.to_json() for p in rec.F]
    return {
        "F": F,
        "per_index": not rec.stationary,
        "x1": format_integer(rec.x1),
        "description": rec.description,
    }


def recurrence_from_json(data: dict) -> PolyRecurrence:
    """``{"F": "X+Y" | [[dx, dy, c], ...], "x1": "1"}``; with ``"per_index": true``
    ``F`` is a list of such polynomials, F_0 first."""
    F = data["F"]
    if data.get("per_index"):
        F = tuple(poly_from_json(p) for p in F)
    else:
        F = poly_from_json(F)
    return PolyRecurrence(F, _int(data["x1"]), data.get("description", ""))
