"""Length-preserving regularization on the product surface A x A over Q.

A sum of squares f in Q[x,y] given by rational-function entries is turned
into a representation whose entries share a single denominator g in Q[x]
with no rational roots, i.e. an identity among regular functions, and the
number of squares never changes:

  1. pull the vertical part out of f: f = h^2 f1 with h in Q[x] collecting
     the even powers of rational linear factors (x - r), and divide the
     entries by h;
  2. view the entries in Q(x)(y) and run the reflection descent over the
     base Q(x), landing in Q(x)[y];
  3. clear the x-denominators: f1 g^2 = sum a_i f_i^2 with f_i in Q[x][y]
     and g the monic lcm in Q[x];
  4. every rational root r of g gives a vanishing line, and since the base
     is formally real the factor (x - r) divides all f_i; cancel until g
     has no rational roots (for already-reduced entries this loop is
     usually empty -- it is the correctness backstop, and a failure means
     the target was never a sum of squares in Q(x,y));
  5. reattach h: the output entries are h f_i / g.

Irrational factors of g (such as x^2 + 1) are deliberately kept: the
output lives in the ring of regular functions, which is strictly larger
than Q[x,y].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bipoly import (
    bipoly_divides,
    is_integral,
    x_content,
    x_denominator_lcm,
)
from .descent import cassels_descent
from .errors import CancellationFailure, IdentityViolated, ZeroPolynomial
from .forms import AMBIENT_Q, AMBIENT_QX, AMBIENT_QXY, SosRep, eval_form, verify_rep
from .poly import QQX, QQXY, QX, Poly, poly_lcm, rational_roots


@dataclass(frozen=True)
class RegularRep:
    """A representation whose entries share the denominator g in Q[x]
    with no rational roots, together with the extracted vertical factor
    h in Q[x] (target = h^2 * inner target)."""

    rep: SosRep
    vertical: Poly     # h, in Q[x]
    denominator: Poly  # g, monic in Q[x], rational_roots(g) = empty

    @property
    def length(self) -> int:
        return self.rep.length


def extract_vertical(f: Poly) -> tuple[Poly, Poly]:
    """Split f in Q[x][y] as f = h^2 * f1 with h in Q[x] the maximal
    product of rational linear factors (x - r)^(m//2).

    A factor (x - r) divides f exactly when it divides the x-content, so
    the rational roots of the content carry all the multiplicities."""
    if f.is_zero:
        raise ZeroPolynomial("cannot extract the vertical part of zero")
    content = x_content(f)
    h = QX.one
    if content.degree > 0:
        for root, mult in rational_roots(content, multiplicities=True).items():
            if mult >= 2:
                linear = QX.poly(((1, Fraction(1)), (0, -root)))
                h = h * linear ** (mult // 2)
    if h.degree == 0:
        return h, f
    f1 = f / QQX.coerce(h * h)
    if not is_integral(f1):
        raise ZeroPolynomial(f"internal error: {h}^2 does not divide {f}")
    return h, f1


def _cancel_rational_roots(g: Poly, numerators: list[Poly]):
    """Remove every rational root of g from g and from all numerators.

    (x - r) must divide each numerator -- guaranteed when the identity
    f1 g^2 = sum a_i f_i^2 holds over a formally real base; a failure
    proves the input was not a sum of squares in Q(x,y)."""
    while g.degree > 0:
        roots = rational_roots(g)
        if not roots:
            break
        for root in sorted(roots):
            linear = QX.poly(((1, Fraction(1)), (0, -root)))
            for fi in numerators:
                if not bipoly_divides(linear, fi):
                    raise CancellationFailure(
                        f"(x - {root}) divides the denominator but not every "
                        f"numerator; the target is not a sum of squares over "
                        f"Q(x,y)")
            g = g.exact_div(linear)
            numerators = [fi / QQX.coerce(linear) for fi in numerators]
    return g, numerators


def clear_to_regular(f, rep: SosRep) -> RegularRep:
    """Run the full pipeline on a bivariate representation; the output
    length always equals the input length."""
    if rep.ambient != AMBIENT_QXY:
        raise ValueError("clear_to_regular expects the Q[x,y] ambient")
    f = QQXY.coerce(f)
    if f is None or rep.target != f:
        raise IdentityViolated("representation target differs from f")
    if not rep.target_is_polynomial:
        raise IdentityViolated(f"{f} is not a polynomial in Q[x,y]")
    check = verify_rep(rep)
    if not check:
        raise IdentityViolated(f"input fails verification: residual {check.residual}")

    target = rep.target_ring_element()
    h, f1 = extract_vertical(target)
    inner_entries = [e / h for e in rep.entries] if h.degree > 0 else list(rep.entries)
    if eval_form(rep.form, inner_entries) != f1:
        raise IdentityViolated("vertical extraction broke the identity")

    if any(not e.is_polynomial for e in inner_entries):
        polys = cassels_descent(rep.form, f1, inner_entries)
    else:
        polys = [e.num for e in inner_entries]

    g = QX.one
    for p in polys:
        g = poly_lcm(g, x_denominator_lcm(p))
    numerators = [p * g if g.degree > 0 else p for p in polys]
    for p in numerators:
        if not is_integral(p):
            raise IdentityViolated("clearing denominators failed to land in Q[x][y]")

    g, numerators = _cancel_rational_roots(g, numerators)

    out_entries = [QQXY.coerce(h) * QQXY.coerce(fi) / QQXY.coerce(g)
                   for fi in numerators]
    out = SosRep(AMBIENT_QXY, target, out_entries, rep.form)
    if out.length != rep.length:
        raise IdentityViolated("pipeline changed the representation length")
    return RegularRep(rep=out, vertical=h, denominator=g)


def scale_to_polynomial(r, rep: SosRep):
    """Length-preserving scaling trick: with g the common denominator of
    the entries, (r g^2, entries * g) is a polynomial target with a
    representation of identical length."""
    check = verify_rep(rep)
    if not check:
        raise IdentityViolated(f"input fails verification: residual {check.residual}")
    target = rep.target
    if rep.ambient == AMBIENT_Q:
        coerced = Fraction(r)
    else:
        coerced = (QQX if rep.ambient == AMBIENT_QX else QQXY).coerce(r)
    if coerced is None or coerced != target:
        raise IdentityViolated("representation target differs from r")
    g = rep.denominator
    new_target = target * g * g
    new_entries = [e * g for e in rep.entries]
    new_rep = SosRep(rep.ambient, new_target, new_entries, rep.form)
    if not new_rep.target_is_polynomial:
        raise IdentityViolated("scaling failed to produce a polynomial target")
    return new_rep.target_ring_element(), new_rep
