"""Exception types raised by the counting engines."""


class UpDownError(Exception):
    """Base class for all errors raised by this package."""


class NonIntegerResult(UpDownError, ArithmeticError):
    """An exact computation expected to be integral produced a fraction."""


class InvalidK(UpDownError, ValueError):
    """The alphabet size is outside the domain of the requested engine."""


class PrecisionExhausted(UpDownError):
    """Certified rounding failed before reaching the precision ceiling."""


class BudgetExceeded(UpDownError):
    """Exhaustive enumeration would visit more words than allowed."""


class NotUpDown(UpDownError, ValueError):
    pass


class NotWeaklyUpDown(UpDownError, ValueError):
    pass


class LengthOneExcluded(UpDownError, ValueError):
    """The weakly/strict bijection is not defined for words of length one."""


class Cancelled(UpDownError):
    """A long-running expansion was stopped by its caller."""
