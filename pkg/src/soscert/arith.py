"""Exact integer and rational square-sum arithmetic.

Two jobs live here.  First, the classical length oracle in Q: the minimal
number of squares needed to write a nonnegative rational as a sum of
squares, which is always 0..4, decided by perfect-square / two-square /
three-square classification of an integer.  The two-square criterion needs
integer factorization, done by trial division plus Pollard rho and capped
at 64 bits (desk scale).

Second, the integer reflection descent for sums of at most three squares:
given an exact rational solution of x1^2+x2^2+x3^2 = n it produces an
integer one by repeatedly reflecting about the fractional part.  The
rounding bound |t - round(t)| <= 1/2 makes the form value of the
fractional part at most 3/4 < 1, which forces the common denominator to
shrink by a factor of at least 4/3 per step.  Rank 4 is rejected: there
the bound degenerates to 1 and descent is no longer guaranteed.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import (
    IdentityViolated,
    InputTooLarge,
    InternalDescentFailure,
    UnsupportedFormRank,
)

FACTOR_BIT_LIMIT = 64

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class NotSos:
    """Singleton result: the element is not a sum of squares."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NotSOS"


NOT_SOS = NotSos()


def is_perfect_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def _is_4a_8b7(n: int) -> bool:
    """True iff n = 4^a (8b+7), the integers needing four squares."""
    if n <= 0:
        return False
    while n % 4 == 0:
        n //= 4
    return n % 8 == 7


def _is_probable_prime(n: int) -> bool:
    # deterministic Miller-Rabin for n < 2^64 with the standard base set
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    # Brent's cycle variant; n must be odd, composite, not a prime power
    if n % 2 == 0:
        return 2
    c = 1
    while True:
        x = y = 2
        d = 1
        f = lambda v: (v * v + c) % n
        while d == 1:
            x = f(x)
            y = f(f(y))
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
        c += 1


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {prime: exponent}.

    Raises InputTooLarge beyond 64 bits; the oracle is for desk scale.
    """
    if n < 1:
        raise ValueError(f"factorize expects n >= 1, got {n}")
    if n.bit_length() > FACTOR_BIT_LIMIT:
        raise InputTooLarge(
            f"{n} exceeds the {FACTOR_BIT_LIMIT}-bit factorization limit")
    factors: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    p = 41
    while p * p <= n and p < 10000:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 2
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if _is_probable_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        root = math.isqrt(m)
        if root * root == m:
            stack.extend((root, root))
            continue
        d = _pollard_rho(m)
        stack.extend((d, m // d))
    return dict(sorted(factors.items()))


def _is_sum_of_two_squares(n: int) -> bool:
    return all(e % 2 == 0 for p, e in factorize(n).items() if p % 4 == 3)


def q_length(q: Fraction | int) -> int | NotSos:
    """Exact length of q as a sum of squares in Q (0..4, or NotSOS).

    length(a/b) = length(a*b) for integers a, b, since scaling by b^2
    preserves length.  A positive integer n has length 1 iff it is a
    perfect square; 2 iff every prime = 3 (mod 4) divides it to an even
    power; 3 iff it is not of the form 4^a(8b+7); otherwise 4.
    """
    q = Fraction(q)
    if q < 0:
        return NOT_SOS
    if q == 0:
        return 0
    n = q.numerator * q.denominator
    if is_perfect_square(n):
        return 1
    if _is_4a_8b7(n):
        return 4  # never a sum of two squares either
    if _is_sum_of_two_squares(n):
        return 2
    return 3


def _sqrt_minus_one_mod(p: int) -> int:
    # p prime, p = 1 (mod 4); smallest base gives a deterministic answer
    a = 2
    while True:
        r = pow(a, (p - 1) // 4, p)
        if r * r % p == p - 1:
            return r
        a += 1


def _two_squares_prime(p: int) -> tuple[int, int]:
    # Cornacchia / Hermite-Serret: Euclid on (p, sqrt(-1)) down to sqrt(p)
    if p == 2:
        return (1, 1)
    x0, x1 = p, _sqrt_minus_one_mod(p)
    while x1 * x1 > p:
        x0, x1 = x1, x0 % x1
    b2 = p - x1 * x1
    b = math.isqrt(b2)
    assert b * b == b2
    return (x1, b)


def two_squares(n: int) -> tuple[int, int]:
    """(a, b) with a^2 + b^2 = n, via Gaussian-integer composition."""
    a, b = 1, 0
    for p, e in factorize(n).items():
        if p % 4 == 3:
            if e % 2:
                raise ValueError(f"{n} is not a sum of two squares")
            q = p ** (e // 2)
            a, b = a * q, b * q
        else:
            c, d = _two_squares_prime(p)
            for _ in range(e):
                a, b = a * c - b * d, a * d + b * c
    a, b = abs(a), abs(b)
    return (a, b) if a >= b else (b, a)


def three_squares(n: int) -> tuple[int, int, int]:
    """(a, b, c) with a^2 + b^2 + c^2 = n; n must not be 4^a(8b+7)."""
    if n == 0:
        return (0, 0, 0)
    if _is_4a_8b7(n):
        raise ValueError(f"{n} is not a sum of three squares")
    if n % 4 == 0:
        a, b, c = three_squares(n // 4)
        return (2 * a, 2 * b, 2 * c)
    for z in range(math.isqrt(n), -1, -1):
        m = n - z * z
        if m == 0:
            return (z, 0, 0)
        if _is_sum_of_two_squares(m):
            a, b = two_squares(m)
            return tuple(sorted((z, a, b), reverse=True))
    raise AssertionError("unreachable: Legendre guarantees a solution")


def four_squares(n: int) -> tuple[int, int, int, int]:
    """(a, b, c, d) with a^2 + b^2 + c^2 + d^2 = n."""
    if n == 0:
        return (0, 0, 0, 0)
    if not _is_4a_8b7(n):
        a, b, c = three_squares(n)
        return tuple(sorted((a, b, c, 0), reverse=True))
    scale = 1
    while n % 4 == 0:
        n //= 4
        scale *= 2
    # n = 7 (mod 8): n - 1 = 6 (mod 8) is a sum of three squares
    a, b, c = three_squares(n - 1)
    return tuple(sorted((scale * a, scale * b, scale * c, scale), reverse=True))


def sum_of_squares_witness(q: Fraction | int) -> list[Fraction]:
    """Exactly q_length(q) rationals whose squares sum to q.

    Scales a/b to the integer a*b, decomposes that, and divides by b.
    """
    q = Fraction(q)
    if q < 0:
        raise ValueError(f"{q} is negative, not a sum of squares in Q")
    if q == 0:
        return []
    n = q.numerator * q.denominator
    k = q_length(q)
    if k == 1:
        ints: tuple[int, ...] = (math.isqrt(n),)
    elif k == 2:
        ints = two_squares(n)
    elif k == 3:
        ints = three_squares(n)
    else:
        ints = four_squares(n)
    witness = [Fraction(w, q.denominator) for w in ints]
    assert sum(w * w for w in witness) == q
    return witness


def round_ties_to_zero(t: Fraction) -> int:
    """Nearest integer to t, ties toward zero; |t - result| <= 1/2."""
    floor = math.floor(t)
    frac = t - floor
    if frac < Fraction(1, 2):
        return floor
    if frac > Fraction(1, 2):
        return floor + 1
    return floor if floor >= 0 else floor + 1


def lcm_denominator(v) -> int:
    """Least common denominator of a vector of rationals."""
    d = 1
    for c in v:
        d = d * c.denominator // math.gcd(d, c.denominator)
    return d


def int_three_square_descent(n: int, v, on_step=None) -> list[int]:
    """Integer solution of w1^2+w2^2+w3^2 = n from an exact rational one.

    Reflects v about u = v - round(v) (ties toward zero): the step
    v <- v - (2 b(v,u) / phi(u)) u preserves the form value exactly and
    multiplies the least common denominator by phi(u) <= 3/4 at most, so
    it strictly shrinks each iteration.  Rank >= 4 is rejected since the
    bound degenerates there.  on_step, when given, is called with
    (step_index, denominator, vector) after every reflection.
    """
    v = [Fraction(c) for c in v]
    if len(v) > 3:
        raise UnsupportedFormRank(
            f"integer descent supports rank <= 3, got rank {len(v)}")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if sum(c * c for c in v) != n:
        raise IdentityViolated(
            f"sum of squares of {v} is {sum(c * c for c in v)}, not {n}")
    den = lcm_denominator(v)
    cap = 3 * den.bit_length() + 8
    steps = 0
    for _ in range(cap):
        if den == 1:
            return [int(c) for c in v]
        w = [round_ties_to_zero(c) for c in v]
        u = [c - wi for c, wi in zip(v, w)]
        phi_u = sum(c * c for c in u)
        if phi_u == 0:
            raise InternalDescentFailure(
                "fractional part vanished on a non-integral vector")
        lam = 2 * sum(a * b for a, b in zip(v, u)) / phi_u
        v = [c - lam * ui for c, ui in zip(v, u)]
        if sum(c * c for c in v) != n:
            raise InternalDescentFailure("reflection changed the form value")
        new_den = lcm_denominator(v)
        if new_den >= den:
            raise InternalDescentFailure(
                f"denominator failed to decrease: {den} -> {new_den}")
        den = new_den
        steps += 1
        if on_step is not None:
            on_step(steps, den, tuple(v))
    raise InternalDescentFailure("iteration cap exceeded")
