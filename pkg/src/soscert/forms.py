"""Diagonal quadratic forms, SOS representation records, verification.

A representation record fixes an ambient ring, a target, a positive
diagonal form (all-ones by default) and a vector of entries in the
ambient's fraction field; the exact identity sum a_i entry_i^2 = target
is checked on construction unless explicitly deferred (the certificate
loader defers so `verify` can report false instead of refusing).

Coefficients of forms are restricted to positive rationals: that makes
the form anisotropic over Q and Q(x) without an isotropy test, which is
all the descent needs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from .bipoly import bipoly_lcm, is_integral, reduced_bifrac
from .errors import IdentityViolated, RankMismatch
from .poly import QQX, QQXY, QX, QXY, Poly, RatFunc, poly_lcm

AMBIENT_Q = "Q"
AMBIENT_QX = "Q[x]"
AMBIENT_QXY = "Q[x,y]"
AMBIENTS = (AMBIENT_Q, AMBIENT_QX, AMBIENT_QXY)

_FIELD_OF = {AMBIENT_QX: QQX, AMBIENT_QXY: QQXY}


@dataclass(frozen=True)
class DiagForm:
    """Diagonal quadratic form <a_1, ..., a_N> with positive rational
    coefficients."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(Fraction(a) for a in self.coefficients)
        if not coeffs:
            raise ValueError("a diagonal form needs rank >= 1")
        if any(a <= 0 for a in coeffs):
            raise ValueError(f"form coefficients must be positive: {coeffs}")
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def ones(cls, rank: int) -> "DiagForm":
        return cls(tuple(Fraction(1) for _ in range(rank)))

    @property
    def rank(self) -> int:
        return len(self.coefficients)

    @property
    def is_sum_of_squares(self) -> bool:
        return all(a == 1 for a in self.coefficients)


def eval_form(form: DiagForm, v):
    """sum a_i v_i^2, exactly, in whatever ring the entries live in."""
    if len(v) != form.rank:
        raise RankMismatch(f"vector of length {len(v)} against rank {form.rank}")
    total = 0
    for a, c in zip(form.coefficients, v):
        total = total + a * c ** 2
    return total


def polar_form(form: DiagForm, u, v):
    """The bilinear form b(u, v) = sum a_i u_i v_i with b(v, v) = phi(v)."""
    if len(u) != form.rank or len(v) != form.rank:
        raise RankMismatch(
            f"vectors of length {len(u)}, {len(v)} against rank {form.rank}")
    total = 0
    for a, ui, vi in zip(form.coefficients, u, v):
        total = total + a * ui * vi
    return total


class VerifyResult(NamedTuple):
    """Outcome of an exact identity check; the residual is the nonzero
    difference sum a_i e_i^2 - target when the check fails."""

    ok: bool
    residual: object

    def __bool__(self):
        return self.ok


def _coerce_element(ambient: str, value):
    if ambient == AMBIENT_Q:
        if isinstance(value, (Fraction, int)):
            return Fraction(value)
        raise TypeError(f"cannot interpret {value!r} as a rational")
    field = _FIELD_OF[ambient]
    coerced = field.coerce(value)
    if coerced is None:
        raise TypeError(f"cannot interpret {value!r} in {field.name}")
    return coerced


class SosRep:
    """A (weighted) sum-of-squares representation of a target element."""

    __slots__ = ("ambient", "target", "entries", "form")

    def __init__(self, ambient: str, target, entries, form: DiagForm | None = None,
                 check: bool = True):
        if ambient not in AMBIENTS:
            raise ValueError(f"unknown ambient {ambient!r}")
        self.ambient = ambient
        self.target = _coerce_element(ambient, target)
        self.entries = tuple(_coerce_element(ambient, e) for e in entries)
        self.form = DiagForm.ones(len(self.entries)) if form is None else form
        if self.form.rank != len(self.entries):
            raise RankMismatch(
                f"{len(self.entries)} entries against form rank {self.form.rank}")
        if check:
            result = verify_rep(self)
            if not result:
                raise IdentityViolated(
                    f"representation does not reproduce its target; "
                    f"residual {result.residual}")

    @property
    def length(self) -> int:
        return len(self.entries)

    def residual(self):
        return eval_form(self.form, self.entries) - self.target

    @property
    def denominator(self):
        """Common denominator of the entries: the monic lcm of the reduced
        entry denominators (an integer for ambient Q, an element of Q[x]
        for Q[x], of Q[x,y] for Q[x,y])."""
        if self.ambient == AMBIENT_Q:
            den = 1
            for e in self.entries:
                den = den * e.denominator // math.gcd(den, e.denominator)
            return den
        if self.ambient == AMBIENT_QX:
            den = QX.one
            for e in self.entries:
                if not e.is_polynomial:
                    den = poly_lcm(den, e.den)
            return den
        den = QXY.one
        for e in self.entries:
            _, d = reduced_bifrac(e)
            if d != QXY.one:
                den = bipoly_lcm(den, d)
        return den

    def target_ring_element(self):
        """The target as a ring element (polynomial / rational number);
        raises if the target is a proper fraction."""
        if self.ambient == AMBIENT_Q:
            return self.target
        return self.target.as_poly()

    @property
    def target_is_polynomial(self) -> bool:
        if self.ambient == AMBIENT_Q:
            return True
        if not self.target.is_polynomial:
            return False
        if self.ambient == AMBIENT_QXY:
            return is_integral(self.target.num)
        return True

    def with_entries(self, entries, check: bool = True) -> "SosRep":
        return SosRep(self.ambient, self.target, entries, self.form, check=check)

    def __repr__(self):
        return (f"SosRep({self.ambient}, length {self.length}, "
                f"target {self.target})")


def verify_rep(rep: SosRep) -> VerifyResult:
    """Exact check of sum a_i entry_i^2 = target.

    Never raises: a failing representation yields ok=False together with
    the nonzero residual, which keeps shrinking informative in tests.
    """
    residual = rep.residual()
    if isinstance(residual, (Fraction, int)):
        ok = residual == 0
    else:
        ok = residual.is_zero
    return VerifyResult(ok, residual)


# Lower-bound provenance labels for length certificates.
REASON_NOT_A_SQUARE = "NotASquare"
REASON_Q_CLASSIFICATION = "QClassification"
REASON_NONNEGATIVITY = "Nonnegativity"
REASON_USER_SUPPLIED = "UserSupplied"


@dataclass(frozen=True)
class LowerBound:
    """n=None together with reason Nonnegativity means the element was
    refuted outright (it is not a sum of squares at all)."""

    n: Optional[int]
    reason: str


@dataclass(frozen=True)
class UpperBound:
    n: int
    witness: Optional[SosRep]  # None only for the zero element


@dataclass(frozen=True)
class LengthCertificate:
    """Best known bounds on the length of an element, with witnesses."""

    element: object
    ambient: str
    upper: Optional[UpperBound]
    lower: Optional[LowerBound]

    @property
    def exact(self) -> bool:
        return (self.upper is not None and self.lower is not None
                and self.lower.n == self.upper.n)

    @property
    def sos_refuted(self) -> bool:
        return self.lower is not None and self.lower.n is None
