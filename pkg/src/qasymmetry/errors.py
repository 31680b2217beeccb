"""Exception types raised by the library."""


class QAsymmetryError(Exception):
    """Base class for all library errors."""


class NonHermitian(QAsymmetryError, ValueError):
    pass


class NonConvergent(QAsymmetryError, ArithmeticError):
    pass


class DimensionMismatch(QAsymmetryError, ValueError):
    pass


class ParamOutOfRange(QAsymmetryError, ValueError):
    pass


class NotPure(QAsymmetryError, ValueError):
    pass


class ThetaZero(QAsymmetryError, ValueError):
    pass


class UnsupportedN(QAsymmetryError, ValueError):
    pass


class InvalidK(QAsymmetryError, ValueError):
    pass


class NotMonotone(QAsymmetryError, ValueError):
    pass


class TargetOutOfRange(QAsymmetryError, IndexError):
    pass
