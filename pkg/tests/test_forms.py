"""Diagonal forms, representation records, exact verification."""

import random
from fractions import Fraction

import pytest

from conftest import rand_fraction, rand_x_poly
from soscert import (
    QQX,
    QQXY,
    QX,
    DiagForm,
    SosRep,
    eval_form,
    parse_bipoly,
    polar_form,
    verify_rep,
)
from soscert.bipoly import bipoly_dict
from soscert.errors import IdentityViolated, RankMismatch

X = QX.gen


def test_eval_form_examples():
    assert eval_form(DiagForm.ones(2), (Fraction(3), Fraction(4))) == 25
    assert eval_form(DiagForm.ones(3),
                     (Fraction(-1, 5), Fraction(7, 5), Fraction(2))) == 6
    assert eval_form(DiagForm((Fraction(2), Fraction(3))),
                     (Fraction(1), Fraction(1))) == 5
    with pytest.raises(RankMismatch):
        eval_form(DiagForm.ones(2), (Fraction(1),))


def test_polar_form_examples():
    form = DiagForm.ones(2)
    assert polar_form(form, (Fraction(1), Fraction(0)),
                      (Fraction(0), Fraction(1))) == 0
    assert polar_form(form, (Fraction(1), Fraction(2)),
                      (Fraction(3), Fraction(4))) == 11
    rng = random.Random(1)
    for _ in range(100):
        v = [rand_fraction(rng) for _ in range(3)]
        f3 = DiagForm.ones(3)
        assert polar_form(f3, v, v) == eval_form(f3, v)


def test_diag_form_validation():
    with pytest.raises(ValueError):
        DiagForm((Fraction(0),))
    with pytest.raises(ValueError):
        DiagForm((Fraction(-1), Fraction(2)))
    with pytest.raises(ValueError):
        DiagForm(())


def test_reflection_identity():
    """eval_form is invariant under reflection about any u with phi(u)!=0;
    500 random instances across both base fields."""
    rng = random.Random(2)
    for trial in range(500):
        n = rng.randint(1, 6)
        form = DiagForm(tuple(Fraction(rng.randint(1, 5)) for _ in range(n)))
        if trial % 2 == 0:
            v = [rand_fraction(rng, -6, 6, 4) for _ in range(n)]
            u = [rand_fraction(rng, -6, 6, 4) for _ in range(n)]
        else:
            v = [QQX.coerce(rand_x_poly(rng, rng.randint(0, 2), -3, 3, nonzero=False))
                 for _ in range(n)]
            u = [QQX.coerce(rand_x_poly(rng, rng.randint(0, 2), -3, 3, nonzero=False))
                 for _ in range(n)]
        phi_u = eval_form(form, u)
        if not phi_u:
            continue
        lam = 2 * polar_form(form, v, u) / phi_u
        reflected = [vi - lam * ui for vi, ui in zip(v, u)]
        assert eval_form(form, reflected) == eval_form(form, v)


def test_verify_rep_examples():
    f = parse_bipoly("x^2*y^2 + x^2 + y^2 + 1")
    rep = SosRep("Q[x,y]", f, [parse_bipoly("x*y - 1"), parse_bipoly("x + y")])
    assert verify_rep(rep)

    seven = SosRep("Q", 7, (2, 1, 1, 1))
    assert verify_rep(seven) and seven.length == 4

    bad = SosRep("Q[x]", X**2 + 1, [QQX.coerce(X), QQX.coerce(2)], check=False)
    result = verify_rep(bad)
    assert not result
    assert result.residual == 3
    with pytest.raises(IdentityViolated):
        SosRep("Q[x]", X**2 + 1, [QQX.coerce(X), QQX.coerce(2)])


def test_verify_invariant_under_permutation_and_signs():
    rng = random.Random(3)
    f = parse_bipoly("x^2*y^2 + x^2 + y^2 + 1")
    entries = [parse_bipoly("x*y - 1"), parse_bipoly("x + y")]
    for _ in range(20):
        shuffled = list(entries)
        rng.shuffle(shuffled)
        signed = [e if rng.random() < 0.5 else -QQXY.coerce(e) for e in shuffled]
        assert verify_rep(SosRep("Q[x,y]", f, signed))


def test_rank_mismatch_on_construction():
    with pytest.raises(RankMismatch):
        SosRep("Q", 5, (1, 2), form=DiagForm.ones(3), check=False)


def test_denominators():
    # Q: plain lcm of entry denominators
    rep = SosRep("Q", Fraction(1, 2), (Fraction(1, 2), Fraction(1, 2)))
    assert rep.denominator == 2
    # Q[x]: monic lcm
    rep = SosRep("Q[x]", X**2 + 1,
                 [QQX.frac(3 * X - X**3, X**2 + 1), QQX.frac(1 - 3 * X**2, X**2 + 1)])
    assert rep.denominator == X**2 + 1
    # Q[x,y]: reduced bivariate lcm
    r = QQXY.frac(parse_bipoly("1"), parse_bipoly("x^2 + y^2"))
    entries = [QQXY.frac(parse_bipoly("x"), parse_bipoly("x^2 + y^2")),
               QQXY.frac(parse_bipoly("y"), parse_bipoly("x^2 + y^2"))]
    rep = SosRep("Q[x,y]", r, entries)
    assert bipoly_dict(rep.denominator) == bipoly_dict(parse_bipoly("x^2 + y^2"))
    # recomputation after an entry rewrite (scaling through) matches
    scaled = SosRep("Q[x,y]", r * rep.denominator ** 2,
                    [e * rep.denominator for e in entries])
    assert scaled.denominator == parse_bipoly("1")


def test_polynomial_entries_have_trivial_denominator():
    rep = SosRep("Q[x]", X**2 + 4, [QQX.coerce(X), QQX.coerce(2)])
    assert rep.denominator == QX.one
    assert rep.target_is_polynomial
