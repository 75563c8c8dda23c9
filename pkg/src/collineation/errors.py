"""Exception types shared across the package."""


class CollineationError(Exception):
    """Base class for all errors raised by this package."""


class DivisionByZero(CollineationError, ZeroDivisionError):
    pass


class FieldMismatch(CollineationError, TypeError):
    pass


class BadReduction(CollineationError, ValueError):
    """A rational cannot be reduced modulo p because p divides its denominator."""


class ArityMismatch(CollineationError, ValueError):
    pass


class RingMismatch(CollineationError, ValueError):
    pass


class NotBinaryForm(CollineationError, ValueError):
    pass


class ResourceExhausted(CollineationError, RuntimeError):
    pass


class NotHomogeneous(CollineationError, ValueError):
    pass


class NotZeroDimensional(CollineationError, ValueError):
    pass


class DegreeMismatch(CollineationError, ValueError):
    pass


class AllZeroMap(CollineationError, ValueError):
    pass


class ZeroTensor(CollineationError, ValueError):
    pass


class BadMinorSize(CollineationError, ValueError):
    pass


class UndefinedCollineation(CollineationError):
    """Every k-minor vanishes identically, so the minors map is not defined."""


class WrongDims(CollineationError, ValueError):
    pass


class EmptySpec(CollineationError, ValueError):
    pass


class OutOfRange(CollineationError, ValueError):
    pass


class UnknownEntry(CollineationError, KeyError):
    pass


class MissingParameter(CollineationError, KeyError):
    pass


class ParseError(CollineationError, ValueError):
    pass


class NotConciseWarning(UserWarning):
    """Issued when a non-concise tensor is silently reduced to its concise core."""
