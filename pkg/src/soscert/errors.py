"""Exception hierarchy.

Everything raised on purpose by this package derives from SosCertError, so
callers can catch one type.  The split mirrors the CLI exit-code contract:
bad input (parse errors, invariant-violating certificates) is distinct from
internal invariant failures, which indicate a bug or corrupted arithmetic
and are never retried.
"""


class SosCertError(Exception):
    """Base class for all errors raised by soscert."""


class ParseError(SosCertError, ValueError):
    """Malformed polynomial/rational text or certificate document."""


class InvalidCertificate(SosCertError, ValueError):
    """A certificate document violates a structural invariant."""


class ZeroPolynomial(SosCertError, ValueError):
    """Operation undefined for the zero polynomial."""


class DivisionByZeroPoly(SosCertError, ZeroDivisionError):
    """Polynomial or rational-function division by zero."""


class BothZero(SosCertError, ValueError):
    """gcd(0, 0) requested."""


class RankMismatch(SosCertError, ValueError):
    """Vector length does not equal the rank of the diagonal form."""


class IdentityViolated(SosCertError, ValueError):
    """A representation does not satisfy its defining exact identity."""


class IsotropicVector(SosCertError):
    """The form vanished on a nonzero vector; impossible for positive
    rational coefficients over a formally real base, so the input is
    corrupted."""


class InternalDescentFailure(SosCertError):
    """The descent measure failed to strictly decrease, or the iteration
    cap was exceeded.  Indicates a bug, never a property of the input."""


class CancellationFailure(SosCertError):
    """A rational root of the common denominator did not divide every
    numerator; the target is not a sum of squares in the fraction field,
    or the arithmetic is corrupted."""


class UnsupportedFormRank(SosCertError, ValueError):
    """Integer descent requested for rank >= 4, where the rounding bound
    degenerates and descent is not guaranteed."""


class InputTooLarge(SosCertError, ValueError):
    """Integer factorization requested beyond the supported 64-bit desk
    scale."""


class NotPSD(SosCertError, ValueError):
    """A Gram matrix has a negative pivot (or a zero pivot with nonzero
    residue), so it is not positive semidefinite."""


class TargetMismatch(SosCertError, ValueError):
    """Gram input does not reproduce its declared target polynomial."""
