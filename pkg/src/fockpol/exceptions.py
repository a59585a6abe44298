"""Exception types raised by fockpol."""


class FockPolError(Exception):
    """Base class for all fockpol errors."""


class DomainError(FockPolError, ValueError):
    """An argument lies outside the domain of a function."""


class TruncationOverflow(FockPolError):
    """The photon-number cap was reached before the tail mass fell below tolerance."""


class VacuumUndefined(FockPolError, ZeroDivisionError):
    """A Stokes degree was requested for the two-mode vacuum."""


class NegativeEntropy(FockPolError):
    """The minimal relative entropy came out significantly negative."""


class NoConvergence(FockPolError):
    """An iterative solver hit its iteration cap."""
