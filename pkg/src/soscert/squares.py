"""Exact square detection with constructible square roots.

A reduced fraction is a square exactly when its numerator and denominator
are squares, and a polynomial square root, when it exists, is determined
coefficient-by-coefficient from the top once a square root of the leading
coefficient is fixed.  That makes the test recursive through the whole
tower Q -> Q[x] -> Q(x) -> Q(x)[y] -> Q(x)(y) with no factorization.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import ZeroPolynomial
from .poly import Poly, RatFunc, rational_roots


def fraction_sqrt(q: Fraction) -> Fraction | None:
    """Exact square root of a rational, or None."""
    q = Fraction(q)
    if q < 0:
        return None
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn != q.numerator or rd * rd != q.denominator:
        return None
    return Fraction(rn, rd)


def poly_sqrt(p: Poly) -> Poly | None:
    """Exact polynomial square root, or None.

    Fixes h's leading coefficient as a square root of p's, then each lower
    coefficient of h is forced by cancelling the top term of p - h^2.
    """
    if p.is_zero:
        return p
    degree = p.degree
    if degree % 2:
        return None
    lc_root = exact_sqrt(p.leading_coeff)
    if lc_root is None:
        return None
    half = degree // 2
    h = p.ring.monomial(half, lc_root)
    r = p - h * h
    double = lc_root + lc_root
    while not r.is_zero:
        top = r.degree
        if top < half:
            return None
        t = p.ring.monomial(top - half, r.leading_coeff / double)
        h_next = h + t
        r = r - t * (h + h_next)
        h = h_next
    return h


def ratfunc_sqrt(f: RatFunc) -> RatFunc | None:
    """Exact square root in the fraction field, or None.

    Reduced fractions are squares iff numerator and denominator both are;
    the denominator is monic, so its root comes out monic too.
    """
    num = poly_sqrt(f.num)
    if num is None:
        return None
    den = poly_sqrt(f.den)
    if den is None:
        return None
    return RatFunc(f.field, num, den)


def exact_sqrt(value):
    """Square root of a Fraction, Poly or RatFunc anywhere in the tower;
    None when the value is not a square."""
    if isinstance(value, (Fraction, int)):
        return fraction_sqrt(Fraction(value))
    if isinstance(value, Poly):
        return poly_sqrt(value)
    if isinstance(value, RatFunc):
        return ratfunc_sqrt(value)
    raise TypeError(f"no square root defined for {type(value).__name__}")


def square_test(f) -> bool:
    """True iff f is a square in its own field (h exists with h^2 = f)."""
    return exact_sqrt(f) is not None


def squarefree_even_part(f: Poly):
    """Split f = h^2 * f1 where h collects the even parts of the rational
    linear factors: h is the product of (x - r)^floor(m/2) over rational
    roots r of multiplicity m.  f1 keeps everything else, so it has no
    rational root of multiplicity >= 2."""
    if f.is_zero:
        raise ZeroPolynomial("cannot split the zero polynomial")
    ring = f.ring
    h = ring.one
    for root, mult in rational_roots(f, multiplicities=True).items():
        if mult >= 2:
            linear = ring.poly(((1, ring.field.one), (0, -root)))
            h = h * linear ** (mult // 2)
    f1 = f.exact_div(h * h)
    return h, f1
