"""Certificate documents on disk.

A certificate is a single JSON document.  All numbers are exact strings
in the polynomial text syntax; nothing is ever floating point.

    {
      "ambient": "Q[x,y]",                 one of Q, Q[x], Q[x,y]
      "target": "x^2*y^2 + x^2 + y^2 + 1", or {"num": ..., "den": ...}
      "form": ["1", "1"],                  optional, default all ones
      "entries": [{"num": "x*y - 1", "den": "1"}, "x + y"]
    }

A document may carry "h" and "g" (written by `clear`: the vertical factor
and the regular denominator) -- both are informative; validity is always
re-derived from the entries.  Gram input uses a "gram" block instead of
"entries":

    {"ambient": "Q[x]",
     "gram": {"target": ..., "monomials": [...], "matrix": [[...], ...]}}

A file is VALID iff the verification identity holds exactly; every loader
here parses without checking so `verify` can report false rather than
refuse.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .bipoly import reduced_bifrac
from .certify import GramInput
from .errors import InvalidCertificate, ParseError
from .forms import AMBIENT_Q, AMBIENT_QX, AMBIENT_QXY, AMBIENTS, DiagForm, SosRep
from .poly import Poly, RatFunc, QQX, QQXY
from .textform import (
    format_bipoly,
    format_rational,
    format_x_poly,
    parse_bipoly,
    parse_rational,
    parse_x_poly,
)


def _parse_ring_element(text: str, ambient: str):
    if ambient == AMBIENT_Q:
        return parse_rational(text)
    if ambient == AMBIENT_QX:
        return parse_x_poly(text)
    return parse_bipoly(text)


def format_ring_element(element, ambient: str) -> str:
    if ambient == AMBIENT_Q:
        return format_rational(element)
    if ambient == AMBIENT_QX:
        return format_x_poly(element)
    return format_bipoly(element)


def _parse_fraction_element(spec, ambient: str, what: str):
    if isinstance(spec, str):
        num, den = spec, None
    elif isinstance(spec, dict):
        unknown = set(spec) - {"num", "den"}
        if unknown or "num" not in spec:
            raise InvalidCertificate(f"{what} must have fields num (and den)")
        num, den = spec["num"], spec.get("den")
    else:
        raise InvalidCertificate(f"{what} must be a string or a num/den object")
    numerator = _parse_ring_element(num, ambient)
    denominator = _parse_ring_element(den, ambient) if den is not None else None
    if ambient == AMBIENT_Q:
        if denominator == 0:
            raise InvalidCertificate(f"{what} has a zero denominator")
        return numerator if denominator is None else numerator / denominator
    field = QQX if ambient == AMBIENT_QX else QQXY
    if denominator is None:
        return field.coerce(numerator)
    if denominator.is_zero:
        raise InvalidCertificate(f"{what} has a zero denominator")
    return field.frac(numerator, denominator)


def format_fraction_element(value, ambient: str):
    """(num, den) exact strings for a fraction-field element."""
    if ambient == AMBIENT_Q:
        value = Fraction(value)
        return str(value.numerator), str(value.denominator)
    if ambient == AMBIENT_QX:
        return format_x_poly(value.num), format_x_poly(value.den)
    num, den = reduced_bifrac(value)
    return format_bipoly(num), format_bipoly(den)


def document_to_rep(doc: dict, check: bool = False) -> SosRep:
    """Build the representation from a parsed document, unverified by
    default so `verify` can say no instead of refusing."""
    if not isinstance(doc, dict):
        raise InvalidCertificate("certificate document must be an object")
    ambient = doc.get("ambient")
    if ambient not in AMBIENTS:
        raise InvalidCertificate(f"ambient must be one of {AMBIENTS}, got {ambient!r}")
    if "target" not in doc or "entries" not in doc:
        raise InvalidCertificate("certificate needs target and entries fields")
    target = _parse_fraction_element(doc["target"], ambient, "target")
    entries = [
        _parse_fraction_element(spec, ambient, f"entry {i}")
        for i, spec in enumerate(doc["entries"])
    ]
    form = None
    if "form" in doc:
        try:
            form = DiagForm(tuple(parse_rational(a) for a in doc["form"]))
        except ValueError as exc:
            raise InvalidCertificate(str(exc)) from exc
    return SosRep(ambient, target, entries, form, check=check)


def rep_to_document(rep: SosRep, h: Poly | None = None, g: Poly | None = None) -> dict:
    doc: dict = {"ambient": rep.ambient}
    if rep.target_is_polynomial:
        doc["target"] = format_ring_element(rep.target_ring_element(), rep.ambient)
    else:
        num, den = format_fraction_element(rep.target, rep.ambient)
        doc["target"] = {"num": num, "den": den}
    if not rep.form.is_sum_of_squares:
        doc["form"] = [format_rational(a) for a in rep.form.coefficients]
    doc["entries"] = []
    for e in rep.entries:
        num, den = format_fraction_element(e, rep.ambient)
        doc["entries"].append({"num": num, "den": den})
    if h is not None:
        doc["h"] = format_x_poly(h)
    if g is not None:
        doc["g"] = format_x_poly(g)
    return doc


def document_to_gram(doc: dict) -> GramInput:
    ambient = doc.get("ambient")
    if ambient not in AMBIENTS:
        raise InvalidCertificate(f"ambient must be one of {AMBIENTS}, got {ambient!r}")
    block = doc.get("gram")
    if not isinstance(block, dict):
        raise InvalidCertificate("gram certificate needs a gram block")
    for field in ("target", "monomials", "matrix"):
        if field not in block:
            raise InvalidCertificate(f"gram block needs a {field} field")
    target = _parse_ring_element(block["target"], ambient)
    monomials = tuple(_parse_ring_element(m, ambient) for m in block["monomials"])
    try:
        matrix = tuple(
            tuple(parse_rational(c) for c in row) for row in block["matrix"])
        return GramInput(ambient, target, monomials, matrix)
    except ValueError as exc:
        raise InvalidCertificate(str(exc)) from exc


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def load_document(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: not a valid certificate document: {exc}") from exc


def save_document(doc: dict, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(doc))
