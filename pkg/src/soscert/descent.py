"""Reflection descent from the rational-function field into the
polynomial ring.

Given a vector v over F(t) representing a polynomial f by a positive
diagonal form phi, split v into its polynomial part w and proper part u
and reflect:

    v' = v - (2 b(v, u) / phi(u)) u

The reflection preserves phi(v) exactly, and because u is proper and
phi(u) != 0 (the form is anisotropic over a formally real base), the
monic lcm of the component denominators strictly drops in degree each
step.  Iterating therefore lands in F[t] after at most deg(denominator)
steps without ever changing the number of entries, which is what makes
the surface pipeline length-preserving.
"""

from __future__ import annotations

from .errors import (
    IdentityViolated,
    InternalDescentFailure,
    IsotropicVector,
)
from .forms import DiagForm, eval_form, polar_form
from .poly import (
    FRACTION_FIELDS,
    Poly,
    RatFunc,
    fractional_split,
    poly_lcm,
)


def _as_field_vector(v) -> list[RatFunc]:
    field = None
    out = []
    for comp in v:
        if isinstance(comp, Poly):
            comp = FRACTION_FIELDS[comp.ring].coerce(comp)
        if not isinstance(comp, RatFunc):
            raise TypeError(f"descent expects rational-function entries, got {comp!r}")
        if field is None:
            field = comp.field
        elif comp.field is not field:
            raise TypeError("descent entries live in different fields")
        out.append(comp)
    if field is None:
        raise ValueError("descent needs a nonempty vector")
    return out


def denominator_degree(v) -> int:
    """Degree of the monic lcm of the reduced component denominators;
    0 when every component is already polynomial."""
    lcm = None
    for comp in v:
        if isinstance(comp, RatFunc) and not comp.is_polynomial:
            lcm = comp.den if lcm is None else poly_lcm(lcm, comp.den)
    return lcm.degree if lcm is not None else 0


def descent_step(form: DiagForm, v, value=None):
    """One reflection.  Requires a non-polynomial component; returns a
    vector with the same form value and strictly smaller denominator
    degree (checked, not trusted).  The form value may be passed in when
    the caller already knows it."""
    v = _as_field_vector(v)
    _, u = fractional_split(v)
    if all(comp.is_zero for comp in u):
        raise ValueError("descent_step requires a non-polynomial component")
    before = denominator_degree(v)
    if value is None:
        value = eval_form(form, v)
    phi_u = eval_form(form, u)
    if phi_u.is_zero:
        raise IsotropicVector(
            "form vanished on a nonzero fractional part; input is corrupted")
    lam = 2 * polar_form(form, v, u) / phi_u
    reflected = [vi - lam * ui for vi, ui in zip(v, u)]
    if eval_form(form, reflected) != value:
        raise InternalDescentFailure("reflection changed the form value")
    after = denominator_degree(reflected)
    if after >= before:
        raise InternalDescentFailure(
            f"denominator degree failed to decrease: {before} -> {after}")
    return reflected


def cassels_descent(form: DiagForm, f, v, on_step=None) -> list[Poly]:
    """Full descent: from phi(v) = f with f a polynomial and v over the
    fraction field, to a polynomial vector of the same length and the
    same form value.

    The iteration count is capped at the initial denominator degree plus
    one; exceeding the cap is a bug signal, never a retry.  on_step, when
    given, is called as on_step(step_index, denominator_degree, vector)
    after every reflection.
    """
    v = _as_field_vector(v)
    field = v[0].field
    target = field.coerce(f)
    if target is None or not target.is_polynomial:
        raise IdentityViolated(f"descent target {f!r} is not a polynomial")
    if eval_form(form, v) != target:
        raise IdentityViolated(
            f"form value {eval_form(form, v)} differs from target {target}")
    cap = denominator_degree(v) + 1
    steps = 0
    while any(not comp.is_polynomial for comp in v):
        if steps >= cap:
            raise InternalDescentFailure(f"descent exceeded {cap} iterations")
        v = descent_step(form, v, value=target)
        steps += 1
        if on_step is not None:
            on_step(steps, denominator_degree(v), v)
    return [comp.as_poly() for comp in v]
