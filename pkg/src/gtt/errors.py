"""Exception types raised by the gtt package."""


class GTTError(Exception):
    """Base class for all gtt errors."""


class BadShape(GTTError):
    pass


class NotUnitary(GTTError):
    pass


class LengthMismatch(GTTError):
    pass


class TooLarge(GTTError):
    pass


class IndexOutOfRange(GTTError):
    pass


class DomainError(GTTError):
    pass


class BadSampleCount(GTTError):
    pass


class NotNormalized(GTTError):
    pass


class BadK(GTTError):
    pass


class BadCutoff(GTTError):
    pass


class BadSelection(GTTError):
    pass


class EmptySelection(GTTError):
    pass


class ZeroVector(GTTError):
    pass
