"""Exception hierarchy shared by all solvers."""


class TSystemError(Exception):
    """Base class for every error raised by this package."""


class ParseError(TSystemError, ValueError):
    pass


class NotDivisible(TSystemError, ArithmeticError):
    """Exact division left a remainder.

    Every in-scope quotient is a Laurent polynomial, so seeing this means a
    bug or inadmissible initial data rather than a recoverable condition.
    """


class UnboundVariable(TSystemError, KeyError):
    pass


class ZeroSubstitution(TSystemError, ZeroDivisionError):
    pass


class ZeroDenominator(TSystemError, ZeroDivisionError):
    pass


class OutOfCone(TSystemError):
    """The requested point is not determined by the stored initial data."""


class WindowTooSmall(TSystemError):
    """A geometric construction needs vertices outside the stored window."""


class NotMutable(TSystemError):
    pass


class NotAddable(TSystemError):
    pass


class NotEvaporable(TSystemError):
    pass


class NotLozengeable(TSystemError):
    pass
