"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class EKBoundsError(Exception):
    """Base class for every error raised by this package."""


class SingularMatrix(EKBoundsError, ArithmeticError):
    pass


class SingularLeadingCoefficient(SingularMatrix):
    pass


class SingularA0(SingularMatrix):
    pass


class NotHermitian(EKBoundsError, ValueError):
    pass


class ZeroMatrixAngle(EKBoundsError, ValueError):
    pass


class ZeroCoefficient(EKBoundsError, ValueError):
    pass


class NonConvergence(EKBoundsError, ArithmeticError):
    pass


class InvalidScale(EKBoundsError, ValueError):
    pass


class InvalidPolynomial(EKBoundsError, ValueError):
    pass


class HypothesisViolated(EKBoundsError):
    """A theorem's hypothesis does not hold for the supplied instance/witness.

    ``link`` is the index of the first failing inequality in the chain when
    that is meaningful, otherwise ``None``.
    """

    def __init__(self, message: str, link: int | None = None):
        super().__init__(message)
        self.link = link


class GeneratorExhausted(EKBoundsError):
    pass


class InstanceFormatError(EKBoundsError, ValueError):
    pass
