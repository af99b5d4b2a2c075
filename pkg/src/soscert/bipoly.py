"""Helpers for Q[x][y] inside the Q(x)[y] engine.

A bivariate polynomial is a QXY polynomial whose coefficients all have
denominator 1.  Gauss's lemma splits every such polynomial into its
x-content (a monic gcd of the coefficients, in Q[x]) and a primitive part,
which is how bivariate gcds, lcms and fully reduced bivariate fractions
are computed without a second polynomial engine.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import BothZero, ZeroPolynomial
from .poly import (
    NEG_INF,
    QQX,
    QX,
    QXY,
    Poly,
    RatFunc,
    poly_gcd,
    poly_lcm,
)


def is_integral(p: Poly) -> bool:
    """True iff every coefficient of p in y is a polynomial in x."""
    return all(c.is_polynomial for _, c in p.terms)


def require_integral(p: Poly, what: str = "polynomial") -> Poly:
    if not is_integral(p):
        raise ValueError(f"{what} has non-polynomial coefficients: {p}")
    return p


def bipoly(data) -> Poly:
    """Build an element of Q[x][y] from {(ex, ey): rational} exponents."""
    columns: dict[int, dict[int, Fraction]] = {}
    for (ex, ey), c in data.items():
        columns.setdefault(ey, {})[ex] = Fraction(c)
    return QXY.poly([(ey, QQX.coerce(QX.poly(col))) for ey, col in columns.items()])


def bipoly_dict(p: Poly) -> dict[tuple[int, int], Fraction]:
    """{(ex, ey): coefficient} for an element of Q[x][y]."""
    require_integral(p)
    out: dict[tuple[int, int], Fraction] = {}
    for ey, c in p.terms:
        for ex, q in c.num.terms:
            out[(ex, ey)] = q
    return out


def degree_x(p: Poly):
    degrees = [c.num.degree for _, c in require_integral(p).terms]
    return max(degrees) if degrees else NEG_INF


def degree_y(p: Poly):
    return p.degree


def x_denominator_lcm(p: Poly) -> Poly:
    """Monic lcm in Q[x] of the coefficient denominators of p."""
    den = QX.one
    for _, c in p.terms:
        if not c.is_polynomial:
            den = poly_lcm(den, c.den)
    return den


def clear_x_denominators(p: Poly) -> tuple[Poly, Poly]:
    """(d, d*p) with d in Q[x] the monic lcm making the result integral."""
    d = x_denominator_lcm(p)
    cleared = p if d.degree == 0 else p * d
    return d, cleared


def x_content(p: Poly) -> Poly:
    """Monic gcd in Q[x] of the coefficients of an integral p != 0."""
    if p.is_zero:
        raise ZeroPolynomial("the zero polynomial has no content")
    require_integral(p)
    content = QX.zero
    for _, c in p.terms:
        content = c.num if content.is_zero else poly_gcd(content, c.num)
        if content.degree == 0:
            break
    return content.monic()


def leading_rational(p: Poly) -> Fraction:
    """Leading rational coefficient: lc in x of lc in y, for integral p."""
    require_integral(p)
    return p.leading_coeff.num.leading_coeff


def normalize_bipoly(p: Poly) -> Poly:
    """Scale by a rational so the leading coefficient tower is 1."""
    if p.is_zero:
        raise ZeroPolynomial("cannot normalize the zero polynomial")
    return p / leading_rational(p)


def content_and_primitive(p: Poly) -> tuple[Poly, Fraction, Poly]:
    """p = content * unit * primitive with a monic content in Q[x], a
    rational unit, and a normalized primitive part."""
    content = x_content(p)
    primitive = p / QQX.coerce(content)
    unit = leading_rational(primitive)
    return content, unit, primitive / unit


def bipoly_gcd(p: Poly, q: Poly) -> Poly:
    """Normalized gcd in Q[x,y] via Gauss: gcd of contents times the
    primitive part of the gcd over Q(x)[y]."""
    if p.is_zero and q.is_zero:
        raise BothZero("gcd(0, 0) is undefined")
    if p.is_zero:
        return normalize_bipoly(q)
    if q.is_zero:
        return normalize_bipoly(p)
    cp, _, pp = content_and_primitive(p)
    cq, _, pq = content_and_primitive(q)
    g = poly_gcd(pp, pq)  # over Q(x)[y]; monic in y
    _, g_int = clear_x_denominators(g)
    if g.degree > 0:
        _, _, g_prim = content_and_primitive(g_int)
    else:
        g_prim = QXY.one
    return normalize_bipoly(g_prim * QQX.coerce(poly_gcd(cp, cq)))


def bipoly_lcm(p: Poly, q: Poly) -> Poly:
    if p.is_zero or q.is_zero:
        raise ZeroPolynomial("lcm with the zero polynomial")
    return normalize_bipoly((p * q).exact_div(bipoly_gcd(p, q)))


def reduced_bifrac(e: RatFunc) -> tuple[Poly, Poly]:
    """Fully reduced bivariate fraction (n, d) in Q[x][y] with e = n/d,
    gcd(n, d) = 1 in Q[x,y] and d normalized.

    Splits the Q(x)[y]-reduced pair into x-contents and primitive parts;
    by Gauss's lemma the primitive parts stay coprime, and the content
    ratio reduces inside Q(x).
    """
    if e.is_zero:
        return QXY.zero, QXY.one
    dn, num_int = clear_x_denominators(e.num)
    dd, den_int = clear_x_denominators(e.den)
    cn, un, n_prim = content_and_primitive(num_int)
    cd, ud, d_prim = content_and_primitive(den_int)
    xfrac = QQX.frac(cn * dd, cd * dn)
    numerator = n_prim * QQX.coerce(xfrac.num) * (un / ud)
    denominator = d_prim * QQX.coerce(xfrac.den)
    return numerator, denominator


def bipoly_divides(d: Poly, p: Poly) -> bool:
    """True iff d in Q[x] divides every coefficient of the integral p."""
    return all((c.num % d).is_zero for _, c in p.terms)


def bipoly_eval(p: Poly, x0: Fraction, y0: Fraction) -> Fraction:
    """Evaluate an element of Q[x][y] at a rational point."""
    at_y = p.evaluate(Fraction(y0))
    if isinstance(at_y, RatFunc):
        return at_y.evaluate(Fraction(x0))
    return Fraction(at_y)
