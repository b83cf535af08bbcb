"""Exception hierarchy shared by every module of the package."""


class ConcurrenceBoundError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(ConcurrenceBoundError, ValueError):
    """An argument lies outside the domain where the operation is defined."""


class UnsupportedDimensionError(DomainError):
    """The operation is only implemented for particular subsystem dimensions."""


class ValidationError(ConcurrenceBoundError, ValueError):
    """A matrix or state violates one of its invariants.

    Parameters
    ----------
    invariant : str
        Short name of the violated invariant, e.g. ``"trace"``, ``"hermitian"``,
        ``"psd"``, ``"dimension"``, ``"finite"``, ``"norm"``.
    message : str
        Human readable detail.
    """

    def __init__(self, invariant: str, message: str):
        self.invariant = invariant
        super().__init__(f"{invariant}: {message}")


class ConvergenceError(ConcurrenceBoundError, ArithmeticError):
    """A Jacobi iteration did not reach its tolerance within the sweep cap."""


class ParseError(ConcurrenceBoundError, ValueError):
    """A document could not be decoded into the expected schema."""
