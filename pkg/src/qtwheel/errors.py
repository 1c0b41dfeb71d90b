"""Exception hierarchy shared by every module."""


class QTWheelError(Exception):
    pass


class InvalidArgument(QTWheelError, ValueError):
    pass


class DivisionError(QTWheelError, ArithmeticError):
    """Raised when an exact division leaves a nonzero remainder."""

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class SingularSeries(QTWheelError, ZeroDivisionError):
    pass


class ResourceLimit(QTWheelError, RuntimeError):
    pass


class IllegalFire(QTWheelError, ValueError):
    pass


class Unsupported(QTWheelError, NotImplementedError):
    pass


class InternalError(QTWheelError, AssertionError):
    """An identity that must hold by construction failed."""
