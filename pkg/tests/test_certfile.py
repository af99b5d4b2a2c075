"""Certificate document round-trips and validation."""

import json
from fractions import Fraction

import pytest

from soscert import QQX, QQXY, QX, SosRep, parse_bipoly, verify_rep
from soscert.certfile import (
    document_to_gram,
    document_to_rep,
    dumps,
    rep_to_document,
)
from soscert.errors import InvalidCertificate, ParseError

X = QX.gen


def test_round_trip_qxy():
    f = parse_bipoly("x^2*y^2 + x^2 + y^2 + 1")
    rep = SosRep("Q[x,y]", f, [parse_bipoly("x*y - 1"), parse_bipoly("x + y")])
    doc = rep_to_document(rep)
    back = document_to_rep(doc)
    assert verify_rep(back)
    assert back.target == rep.target
    assert list(back.entries) == list(rep.entries)
    assert dumps(doc) == dumps(rep_to_document(back))  # byte-stable


def test_round_trip_rational_entries():
    rep = SosRep("Q[x]", X**2 + 1,
                 [QQX.frac(3 * X - X**3, X**2 + 1), QQX.frac(1 - 3 * X**2, X**2 + 1)])
    back = document_to_rep(rep_to_document(rep))
    assert verify_rep(back)
    assert list(back.entries) == list(rep.entries)


def test_round_trip_fraction_target():
    r = QQXY.frac(parse_bipoly("y^2 + 1"), parse_bipoly("x^2"))
    rep = SosRep("Q[x,y]", r, [
        QQXY.frac(parse_bipoly("y"), parse_bipoly("x")),
        QQXY.frac(parse_bipoly("1"), parse_bipoly("x")),
    ])
    doc = rep_to_document(rep)
    assert isinstance(doc["target"], dict)
    back = document_to_rep(doc)
    assert verify_rep(back)


def test_round_trip_q_ambient():
    rep = SosRep("Q", Fraction(7), (2, 1, 1, 1))
    doc = rep_to_document(rep)
    back = document_to_rep(doc)
    assert verify_rep(back) and back.length == 4


def test_entry_shorthand_and_weighted_form():
    doc = {
        "ambient": "Q[x]",
        "target": "5*x^2",
        "form": ["2", "3"],
        "entries": ["x", "x"],
    }
    rep = document_to_rep(doc)
    assert verify_rep(rep)
    assert [str(a) for a in rep.form.coefficients] == ["2", "3"]


def test_invalid_documents():
    with pytest.raises(InvalidCertificate):
        document_to_rep({"ambient": "Z", "target": "1", "entries": []})
    with pytest.raises(InvalidCertificate):
        document_to_rep({"ambient": "Q[x]", "entries": []})
    with pytest.raises(InvalidCertificate):
        document_to_rep({"ambient": "Q[x]", "target": "x",
                         "entries": [{"num": "1", "den": "0"}]})
    with pytest.raises(ParseError):
        document_to_rep({"ambient": "Q[x]", "target": "1.5", "entries": []})
    with pytest.raises(InvalidCertificate):
        document_to_rep({"ambient": "Q[x]", "target": "x", "form": ["-1"],
                         "entries": ["x"]})
    with pytest.raises(ParseError):
        document_to_rep({"ambient": "Q[x]", "target": "y", "entries": []})


def test_gram_document():
    doc = {
        "ambient": "Q[x]",
        "gram": {
            "target": "x^4 + 3*x^2 + 1",
            "monomials": ["1", "x", "x^2"],
            "matrix": [["1", "0", "0"], ["0", "3", "0"], ["0", "0", "1"]],
        },
    }
    gi = document_to_gram(doc)
    assert len(gi.monomials) == 3
    with pytest.raises(InvalidCertificate):
        document_to_gram({"ambient": "Q[x]"})
    bad = dict(doc)
    bad["gram"] = dict(doc["gram"], matrix=[["1", "0"], ["0", "3"]])
    with pytest.raises(InvalidCertificate):
        document_to_gram(bad)


def test_dumps_is_valid_json_and_deterministic():
    f = parse_bipoly("x^2 + y^2")
    rep = SosRep("Q[x,y]", f, [parse_bipoly("x"), parse_bipoly("y")])
    text1 = dumps(rep_to_document(rep))
    text2 = dumps(rep_to_document(rep))
    assert text1 == text2
    parsed = json.loads(text1)
    assert parsed["ambient"] == "Q[x,y]"
    assert parsed["entries"][0] == {"num": "x", "den": "1"}
