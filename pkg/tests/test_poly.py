"""Polynomial engine tests: divmod/gcd identities over both field
instances, rational roots, square detection, splits, and the text syntax.
"""

import random
from fractions import Fraction

import pytest

from conftest import rand_fraction, rand_x_poly, rand_y_poly
from soscert import (
    NEG_INF,
    QQ,
    QQX,
    QQXY,
    QX,
    QXY,
    exact_sqrt,
    format_bipoly,
    format_x_poly,
    fractional_split,
    parse_bipoly,
    parse_rational,
    parse_x_poly,
    poly_gcd,
    poly_lcm,
    rational_roots,
    square_test,
    squarefree_even_part,
)
from soscert.errors import (
    BothZero,
    DivisionByZeroPoly,
    ParseError,
    ZeroPolynomial,
)

X = QX.gen
Y = QXY.gen


def test_degree_sentinel():
    assert QX.zero.degree is NEG_INF
    assert NEG_INF < 0 and NEG_INF < -10 and not (NEG_INF > 5)
    assert NEG_INF <= NEG_INF and NEG_INF >= NEG_INF
    with pytest.raises(TypeError):
        NEG_INF + 1


def test_divmod_examples():
    q, r = divmod(X**3 + 2 * X + 1, X**2 + 1)
    assert q == X and r == X + 1
    q, r = divmod(X**2, X**3)
    assert q.is_zero and r == X**2
    q, r = divmod(X**2 - 1, X - 1)
    assert q == X + 1 and r.is_zero
    with pytest.raises(DivisionByZeroPoly):
        divmod(X, QX.zero)


def test_gcd_examples():
    assert poly_gcd(X**2 - 1, X**2 - 2 * X + 1) == X - 1
    assert poly_gcd(3 * X**2 - 3, QX.zero) == X**2 - 1
    assert poly_gcd(X**2 + 1, X**2 + 2) == QX.one
    with pytest.raises(BothZero):
        poly_gcd(QX.zero, QX.zero)


def test_divmod_gcd_identities_over_q():
    rng = random.Random(101)
    for _ in range(1000):
        a = rand_x_poly(rng, rng.randint(0, 6), -8, 8, max_den=3, nonzero=False)
        b = rand_x_poly(rng, rng.randint(0, 4), -8, 8, max_den=3)
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.is_zero or r.degree < b.degree
        if a.is_zero:
            continue
        g = poly_gcd(a, b)
        assert g.leading_coeff == 1
        assert (a % g).is_zero and (b % g).is_zero
        assert poly_gcd(a.exact_div(g), b.exact_div(g)) == QX.one


def test_divmod_gcd_identities_over_qx():
    rng = random.Random(202)
    for _ in range(1000):
        a = QXY.poly({e: rand_fraction(rng, -4, 4, 2) for e in range(rng.randint(1, 4))})
        b = QXY.poly({e: QQX.coerce(rand_x_poly(rng, rng.randint(0, 1), -3, 3))
                      for e in range(rng.randint(1, 3))})
        if b.is_zero:
            b = QXY.one
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.is_zero or r.degree < b.degree
        if a.is_zero:
            continue
        g = poly_gcd(a, b)
        assert (a % g).is_zero and (b % g).is_zero


def test_gcd_finds_planted_common_factor():
    rng = random.Random(303)
    for _ in range(100):
        common = rand_x_poly(rng, rng.randint(1, 3), -4, 4)
        a = common * rand_x_poly(rng, rng.randint(0, 3), -4, 4)
        b = common * rand_x_poly(rng, rng.randint(0, 3), -4, 4)
        g = poly_gcd(a, b)
        assert (g % common.monic()).is_zero  # gcd contains the plant
        assert (a % g).is_zero and (b % g).is_zero


def test_rational_roots_examples():
    assert rational_roots(X**2 - 2) == set()
    assert rational_roots(X * (X - 1)) == {Fraction(0), Fraction(1)}
    assert rational_roots(2 * X - 3) == {Fraction(3, 2)}
    with pytest.raises(ZeroPolynomial):
        rational_roots(QX.zero)


def test_rational_roots_with_multiplicities():
    rng = random.Random(404)
    for _ in range(60):
        roots = {}
        p = QX.poly({0: rand_fraction(rng, 1, 5), 2: Fraction(1)})  # no rational roots
        for _ in range(rng.randint(0, 3)):
            r = rand_fraction(rng, -4, 4, 3)
            m = rng.randint(1, 3)
            roots[r] = roots.get(r, 0) + m
            p = p * (X - r) ** m
        assert rational_roots(p, multiplicities=True) == dict(sorted(roots.items()))
        # cross-check by evaluation
        for r in roots:
            assert p.evaluate(r) == 0


def test_square_detection():
    assert square_test((X + 1) ** 2)
    assert not square_test(X**2 + 1)
    f = QQX.frac(4 * X**2, X**2 + 2 * X + 1)
    assert square_test(f)
    assert exact_sqrt(f) ** 2 == f
    rng = random.Random(505)
    for _ in range(120):
        h = rand_x_poly(rng, rng.randint(0, 4), -6, 6, max_den=3)
        assert square_test(h * h)
        root = exact_sqrt(h * h)
        assert root * root == h * h
        assert not square_test(h * h * (X**2 + 2))
    # squares detected through the whole tower
    g = QXY.poly({1: QQX.frac(X, X**2 + 1), 0: QQX.one})
    assert square_test(g * g)
    assert exact_sqrt(g * g) ** 2 == g * g


def test_fractional_split():
    v = [QQX.frac(X**3 + 2 * X + 1, X**2 + 1)]
    w, u = fractional_split(v)
    assert w[0] == X
    assert u[0] == QQX.frac(X + 1, X**2 + 1)
    w, u = fractional_split([QQX.coerce(X**2 + 3)])
    assert w[0] == X**2 + 3 and u[0].is_zero
    w, u = fractional_split([QQX.frac(QX.one, X), QQX.coerce(X)])
    assert w[0].is_zero and w[1] == X
    assert u[0] == QQX.frac(QX.one, X) and u[1].is_zero
    rng = random.Random(606)
    for _ in range(200):
        num = rand_x_poly(rng, rng.randint(0, 5), -6, 6, nonzero=False)
        den = rand_x_poly(rng, rng.randint(0, 3), -6, 6)
        comp = QQX.frac(num, den)
        w, u = fractional_split([comp])
        assert w[0] + u[0] == comp
        assert u[0].is_zero or u[0].num.degree < u[0].den.degree


def test_squarefree_even_part():
    h, f1 = squarefree_even_part(X**2 * (X**2 + 1))
    assert h == X and f1 == X**2 + 1
    h, f1 = squarefree_even_part(X**2 + 1)
    assert h == QX.one and f1 == X**2 + 1
    h, f1 = squarefree_even_part(X**3)
    assert h == X and f1 == X
    rng = random.Random(707)
    for _ in range(60):
        f = rand_x_poly(rng, rng.randint(0, 2), -4, 4)
        for _ in range(rng.randint(0, 3)):
            f = f * (X - rand_fraction(rng, -3, 3, 2)) ** rng.randint(1, 4)
        h, f1 = squarefree_even_part(f)
        assert h * h * f1 == f
        assert all(m < 2 for m in rational_roots(f1, multiplicities=True).values())


def test_parse_and_format():
    assert parse_rational("3/2") == Fraction(3, 2)
    assert parse_rational("-7") == -7
    assert parse_x_poly("x^4 + 3/2*x^2 + 1") == X**4 + Fraction(3, 2) * X**2 + 1
    assert parse_x_poly("0") == QX.zero
    assert parse_bipoly("x^2*y^2 + x^2 + y^2 + 1") == \
        (QXY.coerce(X**2) + 1) * (Y**2 + 1)
    assert format_x_poly(X**4 + Fraction(3, 2) * X**2 + 1) == "x^4 + 3/2*x^2 + 1"
    assert format_x_poly(-X**2 - 1) == "-x^2 - 1"
    assert format_x_poly(QX.zero) == "0"
    for bad in ("1.5", "x + z", "x^-2", "3//2", "x^", "", "x +"):
        with pytest.raises(ParseError):
            parse_bipoly(bad)
    with pytest.raises(ParseError):
        parse_x_poly("y + 1")  # y not allowed in the x ambient


def test_format_parse_round_trip():
    rng = random.Random(808)
    for _ in range(150):
        p = rand_y_poly(rng, rng.randint(0, 4))
        text = format_bipoly(p)
        assert parse_bipoly(text) == p
    for _ in range(150):
        p = rand_x_poly(rng, rng.randint(0, 6), -9, 9, max_den=5, nonzero=False)
        assert parse_x_poly(format_x_poly(p)) == p


def test_poly_lcm():
    a = (X - 1) * (X + 2)
    b = (X - 1) * (X - 3)
    lcm = poly_lcm(a, b)
    assert (lcm % a.monic()).is_zero and (lcm % b.monic()).is_zero
    assert lcm.degree == 3 and lcm.leading_coeff == 1


def test_tower_coercions():
    half = Fraction(1, 2)
    assert (X + half) - X == half
    e = QQXY.coerce(X) * Y + 1
    assert e == QXY.poly({1: QQX.coerce(X), 0: QQX.one})
    assert QQX.coerce(QQXY.coerce(X)) is None  # no downward coercion
    assert (QQXY.coerce(7) + QQXY.zero) == 7
