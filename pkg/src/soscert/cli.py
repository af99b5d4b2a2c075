"""Command line front end.

Exit codes separate the mathematics from the plumbing:

    0   affirmed (identity holds, length computed, obstruction passed)
    1   refuted  (identity false, not a square, obstruction failed)
    2   malformed input: parse error or invariant-violating certificate
    3   internal invariant failure (descent measure, cancellation)

All output is exact and byte-identical across runs.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .arith import NOT_SOS, q_length
from .certfile import (
    document_to_gram,
    document_to_rep,
    dumps,
    format_ring_element,
    load_document,
    rep_to_document,
    save_document,
)
from .certify import (
    fourth_power_linear_obstruction,
    gram_to_sos,
    length_certificate,
)
from .descent import cassels_descent, denominator_degree
from .errors import (
    CancellationFailure,
    IdentityViolated,
    InternalDescentFailure,
    IsotropicVector,
    ParseError,
    SosCertError,
)
from .forms import AMBIENT_QX, AMBIENT_QXY, verify_rep
from .squares import exact_sqrt
from .surface import clear_to_regular, scale_to_polynomial
from .textform import format_x_poly, parse_rational, parse_x_poly

_BASES = {"Qx": AMBIENT_QX, "Qx_y": AMBIENT_QXY}


def _emit(doc: dict, output: str | None) -> None:
    if output is None:
        sys.stdout.write(dumps(doc))
    else:
        save_document(doc, output)


def _load_valid_rep(path: str):
    """Load and verify; invalid certificates are refused (exit 2)."""
    rep = document_to_rep(load_document(path), check=False)
    result = verify_rep(rep)
    if not result:
        raise IdentityViolated(
            f"{path}: certificate is invalid; residual {result.residual}")
    return rep


def _cmd_verify(args) -> int:
    rep = document_to_rep(load_document(args.file), check=False)
    result = verify_rep(rep)
    if args.trace or args.trace_full:
        print(f"ambient: {rep.ambient}")
        print(f"length: {rep.length}")
    if result:
        print("valid")
        return 0
    print(f"invalid: residual {result.residual}")
    return 1


def _cmd_descend(args) -> int:
    rep = _load_valid_rep(args.file)
    want = _BASES[args.base]
    if rep.ambient != want:
        raise IdentityViolated(
            f"certificate ambient {rep.ambient} does not match --base {args.base}")
    print(f"initial denominator degree: {denominator_degree(rep.entries)}")

    def trace(step, degree, vector):
        print(f"step {step}: denominator degree {degree}")
        if args.trace_full:
            for i, comp in enumerate(vector):
                print(f"  entry {i}: {comp}")

    # target must be polynomial (in x over Q, or in y over Q(x))
    target = rep.target.as_poly()
    polys = cassels_descent(rep.form, target, rep.entries, on_step=trace)
    out = rep.with_entries(polys)
    print(f"descended to polynomial entries; length {out.length} unchanged")
    _emit(rep_to_document(out), args.output)
    return 0


def _cmd_clear(args) -> int:
    rep = _load_valid_rep(args.file)
    if rep.ambient != AMBIENT_QXY:
        raise IdentityViolated("clear expects a certificate over Q[x,y]")
    if args.trace or args.trace_full:
        print("input identity verified exactly")
    regular = clear_to_regular(rep.target_ring_element(), rep)
    if args.trace or args.trace_full:
        print("output identity verified exactly")
    print(f"vertical factor h: {format_x_poly(regular.vertical)}")
    print(f"regular denominator g: {format_x_poly(regular.denominator)}")
    print(f"length {regular.length} preserved")
    _emit(rep_to_document(regular.rep, h=regular.vertical, g=regular.denominator),
          args.output)
    return 0


def _cmd_scale(args) -> int:
    rep = _load_valid_rep(args.file)
    target, scaled = scale_to_polynomial(rep.target, rep)
    print(f"polynomial target: {format_ring_element(target, rep.ambient)}")
    print(f"length {scaled.length} unchanged")
    _emit(rep_to_document(scaled), args.output)
    return 0


def _cmd_qlength(args) -> int:
    value = q_length(parse_rational(args.rational))
    print(value)
    return 0 if value is not NOT_SOS else 1


def _cmd_square_test(args) -> int:
    f = parse_x_poly(args.f)
    if args.k is not None:
        k = parse_x_poly(args.k)
        if k.degree < 1:
            raise ParseError("--k must be a nonconstant polynomial")
        root = exact_sqrt(f)
        if root is not None:
            print(f"square in Q(x)(sqrt(k)): ({format_x_poly(root)})^2")
            return 0
        root = exact_sqrt(f * k)
        if root is not None:
            print(f"square in Q(x)(sqrt(k)): ({format_x_poly(root)}/k)^2 * k")
            return 0
        print("not a square in Q(x)(sqrt(k))")
        return 1
    root = exact_sqrt(f)
    if root is not None:
        print(f"square: ({format_x_poly(root)})^2")
        return 0
    print("not a square")
    return 1


def _cmd_fourth_power(args) -> int:
    m = parse_rational(args.m)
    if fourth_power_linear_obstruction(m):
        print(f"m = {m} passes the necessary condition 0 <= m <= 6")
        return 0
    print(f"refuted: x^4 + {m}*x^2 + 1 is not a sum of fourth powers of "
          f"polynomials (m outside [0, 6])")
    return 1


def _cmd_gram(args) -> int:
    gram = document_to_gram(load_document(args.file))
    rep = gram_to_sos(gram)
    print(f"extracted a sum of {rep.length} squares")
    _emit(rep_to_document(rep), args.output)
    return 0


def _cmd_certify(args) -> int:
    rep = _load_valid_rep(args.file)
    element = rep.target_ring_element() if rep.target_is_polynomial else rep.target
    cert = length_certificate(element, [rep])
    if rep.target_is_polynomial:
        print(f"element: {format_ring_element(element, rep.ambient)}")
    else:
        print(f"element: {element}")
    print(f"ambient: {cert.ambient}")
    if cert.upper is not None:
        print(f"upper: {cert.upper.n}")
    else:
        print("upper: unknown")
    if cert.lower is not None:
        if cert.lower.n is None:
            print(f"not a sum of squares ({cert.lower.reason})")
        else:
            print(f"lower: {cert.lower.n} ({cert.lower.reason})")
    else:
        print("lower: unknown")
    print(f"exact: {'true' if cert.exact else 'false'}")
    return 0


def _add_output(parser) -> None:
    parser.add_argument("-o", "--output", default=None,
                        help="write the resulting certificate to this file "
                             "(default: stdout)")


def _add_trace(parser) -> None:
    parser.add_argument("--trace", action="store_true",
                        help="print each intermediate identity check")
    parser.add_argument("--trace-full", action="store_true",
                        help="also dump the full entries at every step")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="soscert",
        description="Exact sums-of-squares length certificates over Q, "
                    "Q[x] and Q[x,y].")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check a certificate file exactly")
    p.add_argument("file")
    _add_trace(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("descend",
                       help="rewrite fraction-field entries as polynomial ones")
    p.add_argument("file")
    p.add_argument("--base", choices=sorted(_BASES), required=True,
                   help="Qx: entries in Q(x); Qx_y: entries in Q(x)(y)")
    _add_output(p)
    _add_trace(p)
    p.set_defaults(func=_cmd_descend)

    p = sub.add_parser("clear",
                       help="regularize a Q[x,y] certificate (vertical factor, "
                            "descent, root-free denominator)")
    p.add_argument("file")
    _add_output(p)
    _add_trace(p)
    p.set_defaults(func=_cmd_clear)

    p = sub.add_parser("scale",
                       help="multiply by the squared common denominator to "
                            "reach a polynomial target")
    p.add_argument("file")
    _add_output(p)
    p.set_defaults(func=_cmd_scale)

    p = sub.add_parser("qlength", help="length of a rational number in Q")
    p.add_argument("rational")
    p.set_defaults(func=_cmd_qlength)

    p = sub.add_parser("square-test",
                       help="exact square test, plain or in Q(x)(sqrt(k))")
    p.add_argument("--f", required=True, help="polynomial in x")
    p.add_argument("--k", default=None, help="hyperelliptic right-hand side")
    p.set_defaults(func=_cmd_square_test)

    p = sub.add_parser("fourth-power-check",
                       help="necessary condition for x^4+m*x^2+1 as a sum of "
                            "fourth powers of polynomials")
    p.add_argument("--m", required=True)
    p.set_defaults(func=_cmd_fourth_power)

    p = sub.add_parser("gram", help="exact LDL^T extraction from a Gram matrix")
    p.add_argument("file")
    _add_output(p)
    p.set_defaults(func=_cmd_gram)

    p = sub.add_parser("certify", help="emit a length certificate for the "
                                       "target of a valid representation")
    p.add_argument("file")
    p.set_defaults(func=_cmd_certify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InternalDescentFailure, CancellationFailure, IsotropicVector) as exc:
        print(f"internal failure: {exc}", file=sys.stderr)
        return 3
    except (SosCertError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
