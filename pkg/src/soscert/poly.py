"""Exact univariate polynomial and rational-function arithmetic.

One generic sparse polynomial engine over a computable coefficient field,
instantiated twice to build the tower used everywhere else:

    QQ    rationals (fractions.Fraction)
    QX    Q[x]                 polynomials over QQ
    QQX   Q(x)                 reduced fractions of QX, monic denominator
    QXY   Q(x)[y]              polynomials over QQX
    QQXY  Q(x)(y)              reduced fractions of QXY

Elements of Q[x][y] are QXY polynomials all of whose coefficients have
denominator 1; see the bipoly module for the content machinery on those.

Both base fields are formally real (-1 is not a sum of squares in Q, and a
sum of squares of rational functions vanishes only if every summand does),
which is what the descent and clearing modules rely on.

Terms are stored sparsely as (exponent, coefficient) pairs with strictly
increasing exponents and no zero coefficients, so equality is structural.
The degree of the zero polynomial is the sentinel NEG_INF, which compares
below every integer but refuses arithmetic.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .arith import factorize
from .errors import BothZero, DivisionByZeroPoly, ZeroPolynomial


class _MinusInfinity:
    """Degree of the zero polynomial.  Ordered below every int; any
    attempt to do arithmetic on it raises instead of silently producing
    a wrong degree."""

    __slots__ = ()

    def __lt__(self, other):
        return other is not NEG_INF

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is NEG_INF

    def __repr__(self):
        return "-infinity"


NEG_INF = _MinusInfinity()


class RationalField:
    """Q as a computable coefficient field; elements are Fractions."""

    formally_real = True
    name = "Q"

    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        return None

    def __repr__(self):
        return self.name


QQ = RationalField()


class PolyRing:
    """F[var] for a computable field F."""

    def __init__(self, var: str, field):
        self.var = var
        self.field = field
        self.name = f"{field.name}[{var}]"
        self.zero = Poly(self, ())
        self.one = Poly(self, ((0, field.one),))
        self.gen = Poly(self, ((1, field.one),))

    def poly(self, data) -> Poly:
        """Build a polynomial from {exp: coeff} or (exp, coeff) pairs."""
        items = data.items() if isinstance(data, dict) else data
        combined: dict[int, object] = {}
        for exp, coeff in items:
            if exp < 0:
                raise ValueError(f"negative exponent {exp}")
            c = self.field.coerce(coeff)
            if c is None:
                raise TypeError(f"cannot coerce {coeff!r} into {self.field.name}")
            if exp in combined:
                combined[exp] = combined[exp] + c
            else:
                combined[exp] = c
        terms = tuple(sorted((e, c) for e, c in combined.items() if c != self.field.zero))
        return Poly(self, terms)

    def constant(self, c) -> Poly:
        return self.poly(((0, c),))

    def monomial(self, exp: int, coeff=None) -> Poly:
        return self.poly(((exp, self.field.one if coeff is None else coeff),))

    def coerce(self, value):
        if isinstance(value, Poly) and value.ring is self:
            return value
        # anything else embeds through the coefficient field (which walks
        # the rest of the tower, so e.g. a Q[x] element lands in Q(x)[y])
        c = self.field.coerce(value)
        if c is None:
            return None
        return self.constant(c)

    def __repr__(self):
        return self.name


class Poly:
    """Sparse univariate polynomial; immutable."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: tuple):
        self.ring = ring
        self.terms = terms

    @property
    def degree(self):
        return self.terms[-1][0] if self.terms else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def leading_coeff(self):
        if not self.terms:
            return self.ring.field.zero
        return self.terms[-1][1]

    @property
    def is_constant(self) -> bool:
        return self.degree <= 0

    def constant_value(self):
        """The coefficient of x^0 (the value at 0 for constants)."""
        if self.terms and self.terms[0][0] == 0:
            return self.terms[0][1]
        return self.ring.field.zero

    def coeff(self, exp: int):
        for e, c in self.terms:
            if e == exp:
                return c
        return self.ring.field.zero

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly) and other.ring is self.ring:
            return self.terms == other.terms
        other = self.ring.coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.ring.name, self.terms))

    def __neg__(self):
        return Poly(self.ring, tuple((e, -c) for e, c in self.terms))

    def __add__(self, other):
        other = self.ring.coerce(other)
        if other is None:
            return NotImplemented
        zero = self.ring.field.zero
        merged = dict(self.terms)
        for e, c in other.terms:
            s = merged.get(e, zero) + c
            if s == zero:
                merged.pop(e, None)
            else:
                merged[e] = s
        return Poly(self.ring, tuple(sorted(merged.items())))

    __radd__ = __add__

    def __sub__(self, other):
        other = self.ring.coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self.ring.coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self.ring.coerce(other)
        if other is None:
            return NotImplemented
        zero = self.ring.field.zero
        acc: dict[int, object] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                p = c1 * c2
                s = acc.get(e, zero) + p
                if s == zero:
                    acc.pop(e, None)
                else:
                    acc[e] = s
        return Poly(self.ring, tuple(sorted(acc.items())))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c):
        """Multiply every coefficient by a field element."""
        c = self.ring.field.coerce(c)
        if c is None:
            raise TypeError("scale expects a coefficient")
        if c == self.ring.field.zero:
            return self.ring.zero
        return Poly(self.ring, tuple((e, k * c) for e, k in self.terms))

    def __divmod__(self, other):
        other = self.ring.coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise DivisionByZeroPoly(f"division by zero in {self.ring.name}")
        q = self.ring.zero
        r = self
        d = other.degree
        lc = other.leading_coeff
        while not r.is_zero and r.degree >= d:
            t = self.ring.monomial(r.degree - d, r.leading_coeff / lc)
            q = q + t
            r = r - t * other
        return q, r

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> Poly:
        """Quotient when the division is exact; raises otherwise."""
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ValueError(f"{other} does not divide {self} exactly")
        return q

    def __truediv__(self, other):
        c = self.ring.field.coerce(other)
        if c is not None:
            if c == self.ring.field.zero:
                raise DivisionByZeroPoly(f"division by zero in {self.ring.name}")
            return Poly(self.ring, tuple((e, k / c) for e, k in self.terms))
        other = self.ring.coerce(other)
        if other is None:
            return NotImplemented
        return self.exact_div(other)

    def monic(self) -> Poly:
        if self.is_zero:
            raise ZeroPolynomial("the zero polynomial has no monic form")
        return self / self.leading_coeff

    def evaluate(self, value):
        """Horner evaluation; the value may live in any extension that
        the coefficient arithmetic can mix with."""
        if not self.terms:
            return self.ring.field.zero
        acc = None
        prev = 0
        for exp, coeff in reversed(self.terms):
            if acc is None:
                acc = coeff
            else:
                acc = acc * value ** (prev - exp) + coeff
            prev = exp
        if prev:
            acc = acc * value ** prev
        return acc

    __call__ = evaluate

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp, coeff in reversed(self.terms):
            cs = str(coeff)
            if not isinstance(coeff, Fraction):
                cs = f"({cs})"
            if exp == 0:
                parts.append(cs)
            else:
                v = self.ring.var if exp == 1 else f"{self.ring.var}^{exp}"
                parts.append(v if cs == "1" else f"-{v}" if cs == "-1" else f"{cs}*{v}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self):
        return f"Poly({self.ring.name}: {self})"


def _pseudo_rem(a: Poly, b: Poly) -> Poly:
    """Division-free remainder: a scalar multiple of a mod b obtained by
    eliminating with lc(b)-scaled steps.  Only useful before content
    stripping, which forgets the scalar anyway."""
    ring = a.ring
    lb = b.leading_coeff
    db = b.degree
    r = a
    while not r.is_zero and r.degree >= db:
        r = r.scale(lb) - ring.monomial(r.degree - db, r.leading_coeff) * b
    return r


def _q_primitive(p: Poly) -> Poly:
    """Integer-coprime form of a polynomial over Q (content stripped)."""
    den_lcm = 1
    for _, c in p.terms:
        den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
    num_gcd = 0
    for _, c in p.terms:
        num_gcd = math.gcd(num_gcd, (c * den_lcm).numerator)
    return p.scale(Fraction(den_lcm, num_gcd))


def _frac_primitive(p: Poly) -> Poly:
    """Content-stripped form of a polynomial whose coefficients are
    rational functions: denominators cleared, then the monic gcd of the
    numerators divided out (so every coefficient is a polynomial)."""
    field = p.ring.field
    den = field.ring.one
    for _, c in p.terms:
        if not c.is_polynomial:
            den = poly_lcm(den, c.den)
    if den.degree > 0:
        p = p.scale(field.coerce(den))
    content = field.ring.zero
    for _, c in p.terms:
        content = c.num if content.is_zero else poly_gcd(content, c.num)
        if content.degree == 0:
            break
    if content.degree > 0:
        p = p.scale(field.one / field.coerce(content))
    return p


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor.

    Over Q this is monic Euclid: Fraction coefficients reduce themselves
    after every operation, so the remainders stay at their minimal size.
    When the coefficients are rational functions we use the primitive PRS
    instead (pseudo-remainders, content stripped each step): coefficient
    fractions never appear during elimination, which is what keeps the
    tower usable."""
    if a.is_zero and b.is_zero:
        raise BothZero("gcd(0, 0) is undefined")
    if a.is_zero:
        return b.monic()
    if b.is_zero:
        return a.monic()
    if a.degree == 0 or b.degree == 0:
        return a.ring.one  # nonzero constants are units
    if not isinstance(a.ring.field, FractionField):
        while not b.is_zero:
            a, b = b, (a % b)
            if not b.is_zero:
                b = b.monic()
        return a.monic()
    a = _frac_primitive(a)
    b = _frac_primitive(b)
    if a.degree < b.degree:
        a, b = b, a
    while True:
        r = _pseudo_rem(a, b)
        if r.is_zero:
            return b.monic()
        if r.degree <= 0:
            return a.ring.one
        a, b = b, _frac_primitive(r)


def poly_lcm(a: Poly, b: Poly) -> Poly:
    """Monic least common multiple."""
    if a.is_zero or b.is_zero:
        raise ZeroPolynomial("lcm with the zero polynomial")
    return (a * b).exact_div(poly_gcd(a, b)).monic()


class FractionField:
    """F(var): reduced fractions of F[var] with monic denominators."""

    formally_real = True

    def __init__(self, ring: PolyRing):
        self.ring = ring
        self.name = f"{ring.field.name}({ring.var})"
        self.zero = RatFunc(self, ring.zero, ring.one)
        self.one = RatFunc(self, ring.one, ring.one)
        self.gen = RatFunc(self, ring.gen, ring.one)

    def frac(self, num, den=None) -> RatFunc:
        num = self.ring.coerce(num)
        if num is None:
            raise TypeError(f"cannot coerce numerator into {self.ring.name}")
        if den is None:
            den = self.ring.one
        else:
            den = self.ring.coerce(den)
            if den is None:
                raise TypeError(f"cannot coerce denominator into {self.ring.name}")
        return _reduced(self, num, den)

    def coerce(self, value):
        if isinstance(value, RatFunc) and value.field is self:
            return value
        p = self.ring.coerce(value)
        if p is None:
            return None
        return RatFunc(self, p, self.ring.one)

    def __repr__(self):
        return self.name


def _reduced(field: FractionField, num: Poly, den: Poly) -> RatFunc:
    if den.is_zero:
        raise DivisionByZeroPoly(f"zero denominator in {field.name}")
    if num.is_zero:
        return field.zero
    if den.degree > 0:
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num.exact_div(g)
            den = den.exact_div(g)
    lc = den.leading_coeff
    if lc != field.ring.field.one:
        num = num / lc
        den = den / lc
    return RatFunc(field, num, den)


class RatFunc:
    """Reduced fraction num/den of polynomials, den monic; immutable."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field: FractionField, num: Poly, den: Poly):
        self.field = field
        self.num = num
        self.den = den

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def as_poly(self) -> Poly:
        if not self.is_polynomial:
            raise ValueError(f"{self} is not a polynomial")
        return self.num

    def __bool__(self):
        return not self.num.is_zero

    def __eq__(self, other):
        other = self.field.coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.field.name, self.num.terms, self.den.terms))

    def __neg__(self):
        return RatFunc(self.field, -self.num, self.den)

    def __add__(self, other):
        other = self.field.coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return _reduced(self.field, self.num + other.num, self.den)
        return _reduced(self.field,
                        self.num * other.den + other.num * self.den,
                        self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = self.field.coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self.field.coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self.field.coerce(other)
        if other is None:
            return NotImplemented
        # cross-reduce before multiplying to keep degrees small
        a, b, c, d = self.num, self.den, other.num, other.den
        if not a.is_zero and d.degree > 0:
            g = poly_gcd(a, d)
            if g.degree > 0:
                a, d = a.exact_div(g), d.exact_div(g)
        if not c.is_zero and b.degree > 0:
            g = poly_gcd(c, b)
            if g.degree > 0:
                c, b = c.exact_div(g), b.exact_div(g)
        return _reduced(self.field, a * c, b * d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self.field.coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise DivisionByZeroPoly(f"division by zero in {self.field.name}")
        return self * RatFunc(self.field, other.den, other.num)

    def __rtruediv__(self, other):
        other = self.field.coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if n < 0:
            return self.field.one / self ** (-n)
        if n == 0:
            return self.field.one
        # powers of a reduced fraction are already reduced, and powers of
        # a monic denominator stay monic
        return RatFunc(self.field, self.num ** n, self.den ** n)

    def evaluate(self, value):
        den = self.den.evaluate(value)
        if not den:
            raise ZeroDivisionError(f"pole of {self} at {value}")
        return self.num.evaluate(value) / den

    __call__ = evaluate

    def __str__(self):
        if self.is_polynomial:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatFunc({self.field.name}: {self})"


# The tower.  QXY coefficients are QQX elements; a QXY polynomial whose
# coefficients all have denominator 1 is an element of Q[x][y].
QX = PolyRing("x", QQ)
QQX = FractionField(QX)
QXY = PolyRing("y", QQX)
QQXY = FractionField(QXY)


def fractional_split(v):
    """Componentwise polynomial part and proper part: v = w + u.

    Each component is a RatFunc (or Poly, treated as already split);
    w_i is the divmod quotient of num_i by den_i and u_i is proper
    (numerator degree < denominator degree).
    """
    ws, us = [], []
    for comp in v:
        if isinstance(comp, Poly):
            comp = FRACTION_FIELDS[comp.ring].coerce(comp)
        q, r = divmod(comp.num, comp.den)
        ws.append(q)
        us.append(RatFunc(comp.field, r, comp.den) if not r.is_zero
                  else comp.field.zero)
    return ws, us


FRACTION_FIELDS = {QX: QQX, QXY: QQXY}


def _integer_divisors(n: int) -> list[int]:
    divisors = [1]
    for p, e in factorize(n).items():
        divisors = [d * p ** k for d in divisors for k in range(e + 1)]
    return sorted(divisors)


def rational_roots(g: Poly, multiplicities: bool = False):
    """All rational roots of g in Q[x], by the rational-root theorem on
    the primitive integer form.

    Returns a set of Fractions, or {root: multiplicity} when asked.
    """
    if g.ring.field is not QQ:
        raise TypeError("rational_roots expects a polynomial over Q")
    if g.is_zero:
        raise ZeroPolynomial("the zero polynomial vanishes everywhere")
    roots: dict[Fraction, int] = {}
    low = g.terms[0][0]
    if low > 0:
        roots[Fraction(0)] = low
    if g.degree > low:
        denominator_lcm = 1
        for _, c in g.terms:
            denominator_lcm = (denominator_lcm * c.denominator
                               // math.gcd(denominator_lcm, c.denominator))
        ints = [(e - low, int(c * denominator_lcm)) for e, c in g.terms]
        content = 0
        for _, c in ints:
            content = math.gcd(content, c)
        ints = [(e, c // content) for e, c in ints]
        trailing = abs(ints[0][1])
        leading = abs(ints[-1][1])
        seen = set()
        for p in _integer_divisors(trailing):
            for q in _integer_divisors(leading):
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    if cand in seen:
                        continue
                    seen.add(cand)
                    if g.evaluate(cand) == 0:
                        lin = g.ring.poly(((1, QQ.one), (0, -cand)))
                        mult = 0
                        reduced = g
                        while True:
                            q2, r2 = divmod(reduced, lin)
                            if not r2.is_zero:
                                break
                            reduced = q2
                            mult += 1
                        roots[cand] = mult
    if multiplicities:
        return dict(sorted(roots.items()))
    return set(roots)
