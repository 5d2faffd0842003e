"""Exception hierarchy for the exact-arithmetic engine.

Every failure mode is a clean error; nothing is ever approximated.
"""


class TwistcertError(Exception):
    pass


# algebraic-core

class DivisionByZero(TwistcertError, ZeroDivisionError):
    pass


class DegreeCapExceeded(TwistcertError):
    pass


class NotNegativeDiscriminant(TwistcertError):
    pass


# function-field

class TowerMismatch(TwistcertError):
    pass


class DenominatorVanishes(TwistcertError):
    pass


class MissingAssignment(TwistcertError):
    pass


# automorphism

class UncoveredGenerator(TwistcertError):
    pass


class SingularImageMatrix(TwistcertError):
    pass


class NameCollision(TwistcertError):
    pass


# exact-linalg

class SingularMatrix(TwistcertError):
    pass


class DomainMismatch(TwistcertError):
    pass


# twisted-core

class NotDiagonal(TwistcertError):
    pass


class ZeroElement(TwistcertError):
    pass


class ShiftNotFound(TwistcertError):
    pass


class RepeatedEigenvalues(TwistcertError):
    pass


class UnsupportedSplitting(TwistcertError):
    pass


class MalformedCertificate(TwistcertError):
    pass


# finite-oracle

class EnumerationCapExceeded(TwistcertError):
    pass


# parsing

class ExprSyntaxError(TwistcertError):
    """Syntax error in the element grammar, annotated with the offset."""

    def __init__(self, message, position):
        super().__init__("%s (at offset %d)" % (message, position))
        self.position = position


class UnknownGenerator(TwistcertError):
    pass
