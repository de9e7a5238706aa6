"""Exceptions shared across the package."""


class HHLatticeError(Exception):
    """Base class for all library errors."""


class ZeroPolynomialError(HHLatticeError, ValueError):
    """An operation that requires a nonzero polynomial received zero."""


class PoleError(HHLatticeError, ZeroDivisionError):
    """A denominator (or a negatively-powered variable) evaluated to zero."""

    def __init__(self, message, site=None):
        super().__init__(message)
        self.site = site


class FrameMismatchError(HHLatticeError, ValueError):
    """Provided seed values do not cover the initial frame."""


class MissingSiteError(HHLatticeError, KeyError):
    """A lattice site required by an operation has no stored value."""

    def __init__(self, site):
        super().__init__(site)
        self.site = site

    def __str__(self):
        return "no value stored at site %r" % (self.site,)


class DependencyError(HHLatticeError, ValueError):
    """A requested region cannot be evolved from the seeded frame."""

    def __init__(self, message, site=None):
        super().__init__(message)
        self.site = site


class SingularStepError(HHLatticeError, ZeroDivisionError):
    """The cofactor of a determinant-law evolution step vanished."""

    def __init__(self, message, site=None):
        super().__init__(message)
        self.site = site


class SingularSystemError(HHLatticeError, ValueError):
    """The coefficient matrix of an exact linear solve is singular."""


class InconsistentRecurrenceError(HHLatticeError, ValueError):
    """Solved recurrence coefficients fail on a verification window."""


class RankDeficientError(HHLatticeError, ValueError):
    """A null-vector extraction found a rank-deficient inner window."""


class SingularDenominatorError(HHLatticeError, ZeroDivisionError):
    """The denominator of a rational recurrence step vanished."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class InsufficientDataError(HHLatticeError, ValueError):
    """Not enough data points for the requested analysis."""


class NotLinearInXError(HHLatticeError, RuntimeError):
    """An iterate is not degree <= 1 in its top row seed variable.

    This signals an implementation bug, not a mathematical outcome."""
