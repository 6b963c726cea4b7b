"""Exception hierarchy.

Every error raised on purpose by the package derives from ``RiordanError`` so
callers (and the command line front end) can report the class name verbatim.
"""


class RiordanError(Exception):
    """Base class for all package errors."""


# algebra
class ZeroPolynomial(RiordanError):
    pass


class NonConvergence(RiordanError):
    pass


# laurent
class DegreeViolation(RiordanError):
    pass


class ZeroExponentUnrepresentable(RiordanError):
    pass


class TruncationTooShort(RiordanError):
    pass


# riordan / cauchy
class InvalidSpec(RiordanError):
    pass


class IllPosed(RiordanError):
    pass


class InsufficientInitialData(RiordanError):
    pass


# genfun
class IndexOutOfRange(RiordanError):
    pass


class NonRationalInput(RiordanError):
    pass


class UnsupportedDenominator(RiordanError):
    pass


# amoeba
class DegenerateHull(RiordanError):
    pass


# asympt
class DirectionOutsideCone(RiordanError):
    pass


class EmptyCandidateSet(RiordanError):
    pass


class NoBoundaryCandidate(RiordanError):
    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or []


class PoleAtSaddle(RiordanError):
    pass


class NegativeHessian(RiordanError):
    pass


# file formats
class ProblemFileError(RiordanError):
    pass
