"""Length certificates.

Upper bounds come from explicit representations: user-supplied entries,
exact LDL^T extraction from a rational Gram matrix (each positive pivot d
is itself expanded into exactly q_length(d) rational squares so the result
is a pure sum of squares), or a synthesized square root.  Representations
over the fraction field are pushed through the descent / regularization
pipeline first, which never changes their length.

Lower bounds are deliberately modest: exact classification for rational
constants, 0/1/2 from the square decision procedure, refutation by a
rational point where the target is negative, or a user-supplied bound.
The reason label is recorded so stronger tests can be added later without
changing the certificate shape.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import NOT_SOS, q_length, sum_of_squares_witness
from .bipoly import is_integral
from .descent import cassels_descent
from .errors import IdentityViolated, NotPSD, TargetMismatch
from .forms import (
    AMBIENT_Q,
    AMBIENT_QX,
    AMBIENT_QXY,
    AMBIENTS,
    LengthCertificate,
    LowerBound,
    REASON_NONNEGATIVITY,
    REASON_NOT_A_SQUARE,
    REASON_Q_CLASSIFICATION,
    REASON_USER_SUPPLIED,
    SosRep,
    UpperBound,
    verify_rep,
)
from .poly import QQX, QQXY, QX, Poly, RatFunc
from .squares import exact_sqrt
from .surface import clear_to_regular


@dataclass(frozen=True)
class GramInput:
    """A symmetric rational matrix G with target = m^T G m for an explicit
    monomial vector m."""

    ambient: str
    target: object
    monomials: tuple
    matrix: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.ambient not in AMBIENTS:
            raise ValueError(f"unknown ambient {self.ambient!r}")
        n = len(self.monomials)
        matrix = tuple(tuple(Fraction(c) for c in row) for row in self.matrix)
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise ValueError(f"Gram matrix must be {n}x{n}")
        for i in range(n):
            for j in range(i):
                if matrix[i][j] != matrix[j][i]:
                    raise ValueError("Gram matrix must be symmetric")
        object.__setattr__(self, "matrix", matrix)
        total = 0
        for i in range(n):
            for j in range(n):
                total = total + matrix[i][j] * self.monomials[i] * self.monomials[j]
        if not _equals(total, self.target):
            raise TargetMismatch(
                f"m^T G m = {total} does not equal the target {self.target}")


def _equals(a, b) -> bool:
    diff = a - b
    if isinstance(diff, (Fraction, int)):
        return diff == 0
    return diff.is_zero


def ldl(matrix) -> tuple[list[int], list[list[Fraction]], list[Fraction]]:
    """Exact LDL^T with symmetric pivoting on the largest remaining
    diagonal entry (ties to the lowest index): P G P^T = L D L^T.

    Raises NotPSD on a negative pivot, or when the largest remaining
    diagonal entry is zero while the remaining block is not zero."""
    a = [[Fraction(c) for c in row] for row in matrix]
    n = len(a)
    perm = list(range(n))
    lower = [[Fraction(1) if i == j else Fraction(0) for j in range(n)]
             for i in range(n)]
    diag = [Fraction(0)] * n
    for k in range(n):
        p = max(range(k, n), key=lambda i: (a[i][i], -i))
        pivot = a[p][p]
        if pivot < 0:
            raise NotPSD(f"negative diagonal entry {pivot}")
        if pivot == 0:
            for i in range(k, n):
                for j in range(k, n):
                    if a[i][j] != 0:
                        raise NotPSD("zero pivot with a nonzero residual block")
            break
        if p != k:
            perm[k], perm[p] = perm[p], perm[k]
            a[k], a[p] = a[p], a[k]
            for row in a:
                row[k], row[p] = row[p], row[k]
            for j in range(k):
                lower[k][j], lower[p][j] = lower[p][j], lower[k][j]
        diag[k] = pivot
        for i in range(k + 1, n):
            lower[i][k] = a[i][k] / pivot
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] -= a[i][k] * a[k][j] / pivot
    return perm, lower, diag


def gram_to_sos(gi: GramInput) -> SosRep:
    """Exact SOS extraction: target = sum_i d_i q_i^2 from the pivoted
    LDL^T, then each positive pivot d_i = sum_j c_j^2 with exactly
    q_length(d_i) rational squares, giving a pure sum of squares."""
    perm, lower, diag = ldl(gi.matrix)
    monomials = [gi.monomials[p] for p in perm]
    entries = []
    for i, d in enumerate(diag):
        if d == 0:
            continue
        q_i = 0
        for j in range(i, len(monomials)):
            q_i = q_i + lower[j][i] * monomials[j]
        for c in sum_of_squares_witness(d):
            entries.append(c * q_i)
    return SosRep(gi.ambient, gi.target, entries)


def hyperelliptic_square_test(f, k) -> bool:
    """Is f in Q(x) a square in the quadratic extension Q(x)(sqrt(k))?

    If f = (a + b sqrt(k))^2 then 2ab = 0, so f = a^2 or f = b^2 k;
    hence the test is square_test(f) or square_test(f k)."""
    f = QQX.coerce(f)
    if f is None:
        raise TypeError("f must be a rational function in x")
    k = QX.coerce(k)
    if k is None:
        raise TypeError("k must be a polynomial in x")
    if k.degree < 1:
        raise ValueError("k must be nonconstant")
    return exact_sqrt(f) is not None or exact_sqrt(f * k) is not None


def fourth_power_linear_obstruction(m) -> bool:
    """Necessary condition for x^4 + m x^2 + 1 to be a sum of fourth
    powers of polynomials: writing it as sum (a_i x + b_i)^4 forces
    sum a_i^4 = sum b_i^4 = 1 and 6 sum a_i^2 b_i^2 = m, and by
    Cauchy-Schwarz 0 <= sum a_i^2 b_i^2 <= 1.  So False certifies that
    no such decomposition exists."""
    m = Fraction(m)
    return 0 <= m <= 6


def verify_fourth_power_rep(f, entries) -> bool:
    """Exact check of sum entries_i^4 = f in Q[x]."""
    f = QX.coerce(f)
    if f is None:
        raise TypeError("f must be a polynomial in x")
    total = QX.zero
    for e in entries:
        p = QX.coerce(e)
        if p is None:
            raise TypeError(f"entry {e!r} is not a polynomial in x")
        total = total + p ** 4
    return total == f


_SAMPLE_POINTS = tuple(Fraction(t) for t in (0, 1, -1, 2, -2, 3, -3)) + (
    Fraction(1, 2), Fraction(-1, 2), Fraction(3, 2), Fraction(-3, 2))


def _cauchy_points(terms) -> tuple[Fraction, ...]:
    # beyond 1 + max |c_i / lc| the sign is the leading term's
    if not terms:
        return ()
    lc = terms[-1][1]
    bound = 1 + max(abs(c / lc) for _, c in terms)
    return (bound + 1, -(bound + 1))


def _univariate_negative(terms) -> Fraction | None:
    """A rational point where the polynomial (given as sorted (exp, coeff)
    terms) is negative, or None.  Sampling plus evaluation beyond the
    Cauchy root bound, so odd degrees and negative leading terms are
    always caught."""
    def value(t):
        return sum(c * t ** e for e, c in terms)

    for t in _SAMPLE_POINTS + _cauchy_points(terms):
        if value(t) < 0:
            return t
    return None


def find_negative_witness(element):
    """A rational point (or pair) where the element evaluates negative;
    None when sampling finds nothing.  Never returns a false positive."""
    if isinstance(element, (Fraction, int)):
        return Fraction(element) if element < 0 else None
    if isinstance(element, RatFunc):
        element = element.num if element.is_polynomial else None
        if element is None:
            return None
    if element.ring is QX:
        return _univariate_negative(element.terms)
    # bivariate: freeze x at sample points, then scan in y
    for x0 in _SAMPLE_POINTS:
        terms = []
        usable = True
        for ey, c in element.terms:
            if not c.is_polynomial:
                usable = False
                break
            terms.append((ey, c.num.evaluate(x0)))
        if not usable:
            continue
        terms = [(e, c) for e, c in terms if c != 0]
        y0 = _univariate_negative(terms)
        if y0 is not None:
            return (x0, y0)
    return None


def _classify(element):
    if isinstance(element, (Fraction, int)):
        return AMBIENT_Q, Fraction(element)
    if isinstance(element, Poly):
        field = QQX if element.ring is QX else QQXY
        ambient = AMBIENT_QX if element.ring is QX else AMBIENT_QXY
        return ambient, field.coerce(element)
    if isinstance(element, RatFunc):
        ambient = AMBIENT_QX if element.field is QQX else AMBIENT_QXY
        return ambient, element
    raise TypeError(f"cannot certify {element!r}")


def _polynomialize(rep: SosRep) -> SosRep:
    """Push a fraction-field representation into the ring when possible;
    the length never changes."""
    if not rep.target_is_polynomial:
        return rep
    if rep.ambient == AMBIENT_QX:
        if all(e.is_polynomial for e in rep.entries):
            return rep
        polys = cassels_descent(rep.form, rep.target.as_poly(), rep.entries)
        return rep.with_entries(polys)
    if rep.ambient == AMBIENT_QXY:
        if all(e.is_polynomial and is_integral(e.num) for e in rep.entries):
            return rep
        return clear_to_regular(rep.target_ring_element(), rep).rep
    return rep


def length_certificate(element, known_reps=(), user_lower: int | None = None
                       ) -> LengthCertificate:
    """Assemble the best bounds for one element from verified
    representations plus the built-in lower-bound tests."""
    ambient, target = _classify(element)

    upper: UpperBound | None = None
    for rep in known_reps:
        if rep.ambient != ambient or rep.target != target:
            raise IdentityViolated(
                f"representation targets {rep.target}, not {target}")
        check = verify_rep(rep)
        if not check:
            raise IdentityViolated(
                f"representation fails verification: residual {check.residual}")
        improved = _polynomialize(rep)
        if upper is None or improved.length < upper.n:
            upper = UpperBound(improved.length, improved)

    lower: LowerBound | None
    if ambient == AMBIENT_Q:
        k = q_length(target)
        if k is NOT_SOS:
            lower = LowerBound(None, REASON_NONNEGATIVITY)
        else:
            lower = LowerBound(k, REASON_Q_CLASSIFICATION)
            if upper is None or upper.n > k:
                witness = SosRep(AMBIENT_Q, target, sum_of_squares_witness(target)) \
                    if k > 0 else None
                upper = UpperBound(k, witness) if witness is not None \
                    else UpperBound(0, None)
    else:
        is_zero = target.is_zero
        if is_zero:
            lower = LowerBound(0, REASON_Q_CLASSIFICATION)
            if upper is None or upper.n > 0:
                upper = UpperBound(0, None)
        elif upper is None and find_negative_witness(element) is not None:
            lower = LowerBound(None, REASON_NONNEGATIVITY)
        else:
            root = exact_sqrt(target)
            if root is not None:
                lower = LowerBound(1, REASON_NOT_A_SQUARE)
                if upper is None or upper.n > 1:
                    upper = UpperBound(1, SosRep(ambient, target, (root,)))
            else:
                lower = LowerBound(2, REASON_NOT_A_SQUARE)

    if user_lower is not None and (lower.n is not None and lower.n < user_lower):
        lower = LowerBound(user_lower, REASON_USER_SUPPLIED)
    if upper is not None and lower.n is not None and lower.n > upper.n:
        raise IdentityViolated(
            f"lower bound {lower.n} exceeds a verified upper bound {upper.n}")
    return LengthCertificate(element=element, ambient=ambient,
                             upper=upper, lower=lower)
