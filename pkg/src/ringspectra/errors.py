"""Exception and warning types shared across the package."""
from __future__ import annotations

from .specfun import DomainError

__all__ = [
    "DomainError",
    "NumericalFailure",
    "BracketError",
    "TrackingError",
    "ClassificationError",
    "ModeError",
    "ResonanceError",
    "NearTangencyWarning",
]


class NumericalFailure(RuntimeError):
    """A solver lost control of a root; signals kernel or grid trouble."""


class BracketError(NumericalFailure):
    """No sign change found where the theory guarantees one."""


class TrackingError(NumericalFailure):
    """An eigenvalue branch jumped by more than the continuation window."""


class ClassificationError(NumericalFailure):
    """A root sits too close to both branch references to be labelled."""


class ModeError(ValueError):
    """Requested angular mode carries no bound state."""


class ResonanceError(ValueError):
    """Inner eigenvalue coincides with the outer threshold ``-alpha**2/4``."""


class NearTangencyWarning(UserWarning):
    """Two roots of a spectral function merge below grid resolution."""
