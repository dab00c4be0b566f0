"""Exception hierarchy shared by every module."""


class UnivJacError(Exception):
    """Base class for all library errors."""


class DomainError(UnivJacError, ValueError):
    """Input outside the mathematical domain (g < 3, bad graph, ...)."""


class RangeError(DomainError):
    """An index such as a boundary index ``i`` or family parameter ``h`` is out of range."""


class NotApplicable(DomainError):
    """A test family is not defined for the requested degree."""


class VerificationError(UnivJacError):
    """A consistency check over the computed data failed."""
