"""Exception hierarchy.

Everything raised on purpose derives from :class:`MultJumpError`.  Problems
with user-supplied data additionally derive from :class:`ValidationError`
(a :class:`ValueError`), which the CLI maps to exit status 2.  The remaining
classes signal broken internal invariants.
"""


class MultJumpError(Exception):
    pass


class ValidationError(MultJumpError, ValueError):
    pass


class SingularMatrix(ValidationError):
    pass


class DuplicateAbscissa(ValidationError):
    pass


class NotCofinite(ValidationError):
    pass


class DegenerateFacet(ValidationError):
    pass


class BadLatticePoint(ValidationError):
    pass


class NotNegativeDefinite(ValidationError):
    pass


class NotAntiNef(ValidationError):
    pass


class AdjunctionMismatch(ValidationError):
    pass


class NonIntegralCanonical(ValidationError):
    pass


class NegativeChi(ValidationError):
    pass


class NoReesValuation(ValidationError):
    pass


class InputError(ValidationError):
    """Malformed input document."""


class PolynomialityViolation(MultJumpError):
    """Multiplicities along a class failed to lie on one polynomial."""


class Unstable(MultJumpError):
    """Colength growth had not settled on a polynomial within the samples."""
