"""soscert: exact sums-of-squares length certificates.

Everything is exact rational arithmetic: lengths of rationals in Q, the
reflection descent from Q(x) into Q[x] (and from Q(x)(y) into Q(x)[y]),
the length-preserving regularization pipeline on the product surface over
Q, Gram-matrix extraction by exact LDL^T, and the square / fourth-power
obstruction tests.  No floating point anywhere.
"""

from .arith import (
    NOT_SOS,
    NotSos,
    four_squares,
    int_three_square_descent,
    q_length,
    round_ties_to_zero,
    sum_of_squares_witness,
    three_squares,
    two_squares,
)
from .certify import (
    GramInput,
    find_negative_witness,
    fourth_power_linear_obstruction,
    gram_to_sos,
    hyperelliptic_square_test,
    ldl,
    length_certificate,
    verify_fourth_power_rep,
)
from .descent import cassels_descent, denominator_degree, descent_step
from .forms import (
    AMBIENT_Q,
    AMBIENT_QX,
    AMBIENT_QXY,
    DiagForm,
    LengthCertificate,
    LowerBound,
    SosRep,
    UpperBound,
    VerifyResult,
    eval_form,
    polar_form,
    verify_rep,
)
from .poly import (
    NEG_INF,
    QQ,
    QQX,
    QQXY,
    QX,
    QXY,
    FractionField,
    Poly,
    PolyRing,
    RatFunc,
    fractional_split,
    poly_gcd,
    poly_lcm,
    rational_roots,
)
from .squares import exact_sqrt, square_test, squarefree_even_part
from .surface import (
    RegularRep,
    clear_to_regular,
    extract_vertical,
    scale_to_polynomial,
)
from .textform import (
    format_bipoly,
    format_rational,
    format_x_poly,
    parse_bipoly,
    parse_rational,
    parse_x_poly,
)
from .bipoly import bipoly, bipoly_dict, bipoly_gcd, bipoly_lcm

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
