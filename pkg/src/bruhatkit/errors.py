"""Exception hierarchy shared by every bruhatkit module."""


class BruhatkitError(Exception):
    """Base class for domain errors (CLI exit code 3)."""


class NotAUnit(BruhatkitError, ZeroDivisionError):
    pass


class NotAField(BruhatkitError):
    pass


class RingMismatch(BruhatkitError, TypeError):
    pass


class InvalidPermutation(BruhatkitError, ValueError):
    pass


class UndecidableWithoutBound(BruhatkitError):
    """Raised when a comparison involving a non-identity tail has no bound."""


class EqualPermutations(BruhatkitError, ValueError):
    pass


class InvalidPair(BruhatkitError, ValueError):
    pass


class NotComparable(BruhatkitError):
    pass


class NotADescent(BruhatkitError, ValueError):
    pass


class NotInvertible(BruhatkitError):
    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class DimensionMismatch(BruhatkitError, ValueError):
    pass


class InvalidFiltration(BruhatkitError, ValueError):
    pass


class InternalContradiction(BruhatkitError, AssertionError):
    """A membership verdict disagreed with the Bruhat comparison; never expected."""


class TooLarge(BruhatkitError, ValueError):
    pass
