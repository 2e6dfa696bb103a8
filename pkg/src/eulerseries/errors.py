"""Exception hierarchy shared by every module."""


class EulerSeriesError(Exception):
    """Base class for errors raised by this package."""


class InvalidPrecision(EulerSeriesError, ValueError):
    pass


class UnknownConstant(EulerSeriesError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown constant"


class DomainError(EulerSeriesError, ValueError):
    """Argument outside the region where a series or integral is defined."""


class PrecisionExhausted(EulerSeriesError, ArithmeticError):
    """The requested accuracy needs more working digits than the context allows.

    ``required_extra`` is the number of additional decimal digits the caller
    would need to add to ``--precision`` (or ``make_context(digits=...)``).
    """

    def __init__(self, message, required_extra=None):
        super().__init__(message)
        self.required_extra = required_extra
