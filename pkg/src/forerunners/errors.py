"""Exception types shared across the package."""


class ForerunnersError(Exception):
    """Base class for all library errors."""


class DomainError(ForerunnersError, ValueError):
    """Input outside the mathematical domain of an operation."""


class TunnelingRegimeError(DomainError):
    """Incidence energy at or above the barrier height where E0 < V is required."""


class SingularPointError(DomainError):
    """Evaluation requested exactly at a singular point of a formula."""


class PoleSearchError(ForerunnersError):
    """Newton search for a resonance pole failed or collapsed onto a duplicate."""


class NormalizationError(ForerunnersError):
    """Degenerate normalization integrand for a resonant state."""


class ConvergenceError(ForerunnersError):
    """An iterative refinement failed to reach its tolerance.

    Carries the last two estimates so callers can inspect how far apart
    they ended up.
    """

    def __init__(self, message, previous=None, current=None):
        super().__init__(message)
        self.previous = previous
        self.current = current


class MonotonicSignalError(ForerunnersError):
    """No interior density maximum inside the searched time window."""


class UndefinedFrequencyError(ForerunnersError):
    """Local frequency requested at a point where |psi| is below the floor."""


class NoTransitionError(ForerunnersError):
    """No pole/saddle crossing exists in the searched window."""


class MissingDependencyError(ForerunnersError):
    """An operation needs a precomputed input (e.g. a pole table) it was not given."""


class FitError(ForerunnersError):
    """Degenerate input to a least-squares fit."""


class DomainTruncationError(ForerunnersError):
    """A probe lies outside the reflection-free region of a truncated grid."""
