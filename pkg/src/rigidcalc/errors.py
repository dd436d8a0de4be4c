"""Exception hierarchy shared by every rigidcalc module."""


class RigidCalcError(Exception):
    """Base class for all errors raised by rigidcalc."""


# exact algebra
class DivisionNotExact(RigidCalcError):
    pass


class ZeroDivisor(RigidCalcError, ZeroDivisionError):
    pass


class UnassignedSymbol(RigidCalcError):
    pass


class ZeroPolynomial(RigidCalcError):
    pass


class WitnessViolation(RigidCalcError):
    """A parameter witness does not satisfy one of its declared constraints."""


# operators
class NotLeftDivisible(RigidCalcError):
    pass


class ZeroOperator(RigidCalcError):
    pass


class NotSingular(RigidCalcError):
    pass


class IrrationalExponent(RigidCalcError):
    pass


class UncertifiedExponent(RigidCalcError):
    pass


# monodromy
class PointSetMismatch(RigidCalcError):
    pass


class NotApplicable(RigidCalcError):
    pass


class RankMismatch(RigidCalcError):
    pass


class MissingPreimageLabels(RigidCalcError):
    pass


# hodge
class InconsistentProfile(RigidCalcError):
    pass


class MissingDelta(RigidCalcError):
    pass


class WitnessRequired(RigidCalcError):
    pass


class NegativeCount(RigidCalcError):
    pass


class NoSolution(RigidCalcError):
    pass


class Ambiguous(RigidCalcError):
    pass


class TrivialEigenvalueAtInfinity(RigidCalcError):
    pass


# fixtures / parsing
class UnknownFixture(RigidCalcError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class ExpressionSyntaxError(RigidCalcError):
    def __init__(self, message, pos=None):
        self.pos = pos
        if pos is not None:
            message = f"{message} (at position {pos})"
        super().__init__(message)


class NonIntegerExponent(ExpressionSyntaxError):
    pass
