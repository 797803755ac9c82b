"""Exception hierarchy.

Every domain error carries a stable ``name`` (the class name) which the
command line front end echoes verbatim.
"""


class HeckeCombError(ValueError):
    """Base class for all domain errors raised by the library."""

    @property
    def name(self) -> str:
        return type(self).__name__


class SingularMatrix(HeckeCombError):
    pass


class NotPrime(HeckeCombError):
    pass


class IndexOutOfRange(HeckeCombError):
    pass


class BudgetExceeded(HeckeCombError):
    pass


class NotInParabolic(HeckeCombError):
    pass


class InvalidShape(HeckeCombError):
    pass


class LengthMismatch(HeckeCombError):
    pass


class InvalidComposition(HeckeCombError):
    pass


class NotDecreasing(HeckeCombError):
    pass


class NonIntegralBreakpoint(HeckeCombError):
    pass


class InvalidBundle(HeckeCombError):
    pass


class BlockMismatch(HeckeCombError):
    pass


class NotDominant(HeckeCombError):
    pass


class PreconditionFailed(HeckeCombError):
    pass


class NotLCentral(HeckeCombError):
    pass


class NonIntegralDimension(HeckeCombError):
    pass


class SemistableInput(HeckeCombError):
    pass


class RankOutOfRange(HeckeCombError):
    pass


class NonIntegralDegree(HeckeCombError):
    pass


class Unsupported(HeckeCombError):
    pass
