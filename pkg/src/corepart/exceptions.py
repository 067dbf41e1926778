"""Exception types raised across the package."""


class CorepartError(Exception):
    """Base class for errors raised by this package."""


class NonInvertibleSeriesError(CorepartError, ZeroDivisionError):
    """The denominator of a series expansion has zero constant term."""


class InfiniteFamilyError(CorepartError, ValueError):
    """Non-coprime core parameters: infinitely many simultaneous cores."""


class BudgetExceededError(CorepartError, RuntimeError):
    """An exponential enumeration or large computation would exceed its budget."""


class SingularCaseError(CorepartError, ValueError):
    """A closed formula is undefined for the requested parameter (e.g. d = 2)."""
