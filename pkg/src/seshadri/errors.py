"""Exception hierarchy shared by all modules.

ValidationError means the input object itself is malformed (CLI exit 2);
PreconditionError means a well-formed input violates an operation's
precondition (CLI exit 3).
"""


class SeshadriError(Exception):
    pass


class ValidationError(SeshadriError):
    pass


class PreconditionError(SeshadriError):
    pass


class NotSymmetric(ValidationError):
    pass


class WrongSignature(ValidationError):
    def __init__(self, signature):
        self.signature = signature
        super().__init__(f"signature {signature} is not (1, n-1)")


class DimensionMismatch(ValidationError):
    pass


class BadFamily(ValidationError):
    pass


class UnknownFormat(ValidationError):
    pass


class ZeroVector(PreconditionError):
    pass


class NotNef(PreconditionError):
    pass


class NotAmple(PreconditionError):
    pass


class NotForward(PreconditionError):
    pass


class NotPrimitive(PreconditionError):
    pass


class NotIsometry(PreconditionError):
    pass


class ReversesCone(PreconditionError):
    pass


class PerfectSquare(PreconditionError):
    pass


class SquareSelfIntersection(PreconditionError):
    pass


class CapNotPositive(PreconditionError):
    pass


class BoundNotPositive(PreconditionError):
    pass


class DenominatorNonPositive(PreconditionError):
    pass


class ZetaNotPositive(PreconditionError):
    pass


class WindowCountMismatch(PreconditionError):
    pass


class BoundNotSubmaximal(PreconditionError):
    pass


class WrongRho(PreconditionError):
    pass


class GridPointNotNef(PreconditionError):
    pass


class IrrationalClass(PreconditionError):
    pass


class BudgetExceeded(PreconditionError):
    """Candidate enumeration would exceed the configured work budget."""
