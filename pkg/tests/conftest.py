"""Shared random generators for the test suite.

Everything is seeded: the suite is deterministic, and the rotation sizes
are calibrated so the exact arithmetic stays at desk scale (coefficient
bit lengths grow geometrically per descent step, so denominator degrees
are kept moderate by construction).
"""

from __future__ import annotations

import random
from fractions import Fraction

from soscert import QQX, QQXY, QX, QXY, DiagForm, eval_form


def rand_fraction(rng: random.Random, lo: int = -5, hi: int = 5,
                  max_den: int = 4) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def rand_x_poly(rng: random.Random, deg: int, lo: int = -5, hi: int = 5,
                max_den: int = 1, nonzero: bool = True):
    p = QX.poly({e: rand_fraction(rng, lo, hi, max_den) for e in range(deg + 1)})
    if nonzero and p.is_zero:
        return QX.one
    return p


def rand_y_poly(rng: random.Random, ydeg: int, sparse_x: float = 0.3):
    """Polynomial in Q[x][y] with mostly-rational coefficients; an
    occasional coefficient picks up a degree-1 x part."""
    coeffs = {}
    for e in range(ydeg + 1):
        if rng.random() < sparse_x:
            coeffs[e] = QQX.coerce(rand_x_poly(rng, 1, -2, 2))
        else:
            coeffs[e] = QQX.coerce(Fraction(rng.randint(-2, 2)))
    p = QXY.poly(coeffs)
    return p if not p.is_zero else QXY.one


def rotate_pair(v: list, t, field, rng: random.Random) -> list:
    """Apply the Pythagorean-parameterized rotation with parameter t to a
    random coordinate pair; preserves the all-ones form value exactly."""
    one = field.one
    c = (one - t * t) / (one + t * t)
    s = (t + t) / (one + t * t)
    i, j = rng.sample(range(len(v)), 2)
    out = list(v)
    out[i], out[j] = c * v[i] + s * v[j], -s * v[i] + c * v[j]
    return out


def rand_qx_rotation_case(rng: random.Random, max_n: int = 5, max_deg: int = 4):
    """(form, f, rotated vector) over base Q: vector of Q[x] polynomials
    rotated by 1-2 random rational rotations with parameters in Q(x)."""
    n = rng.randint(1, max_n)
    form = DiagForm.ones(n)
    v = [QQX.coerce(rand_x_poly(rng, rng.randint(0, max_deg), -5, 5))
         for _ in range(n)]
    f = eval_form(form, v).as_poly()
    if n >= 2:
        for _ in range(rng.randint(1, 2)):
            t = QQX.frac(rand_x_poly(rng, rng.randint(0, 1), -3, 3),
                         rand_x_poly(rng, rng.randint(0, 1), -3, 3))
            v = rotate_pair(v, t, QQX, rng)
    return form, f, v


def rand_qxy_rotation_case(rng: random.Random, max_n: int = 5, max_deg: int = 4):
    """(form, f, rotated vector) over base Q(x): vector of Q(x)[y]
    polynomials rotated by one rotation whose parameter involves y."""
    n = rng.randint(1, max_n)
    ydeg_cap = max_deg if n <= 3 else max_deg - 1
    form = DiagForm.ones(n)
    v = []
    for idx in range(n):
        cap = ydeg_cap if idx < 2 else min(2, ydeg_cap)
        v.append(QQXY.coerce(rand_y_poly(rng, rng.randint(0, cap))))
    f = eval_form(form, v).as_poly()
    if n >= 2:
        y = QQXY.coerce(QXY.gen)
        c = Fraction(rng.randint(1, 3))
        t = [y, y + c, y - c, c * y][rng.randrange(4)]
        v = rotate_pair(v, t, QQXY, rng)
    return form, f, v
