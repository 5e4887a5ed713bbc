"""Spectra of planar Schrodinger operators with delta interactions on circles.

One circle of radius ``R`` and coupling ``gamma``, or two concentric circles
(inner ``R, beta``; outer ``R + d, alpha``). Modules:

``specfun``
    integer-order modified Bessel functions with scaled variants
``single_ring``, ``double_ring``
    secular equations and their roots per angular mode
``asymptotics``
    closed-form coefficients for small and large separation
``harness``
    separation sweeps, fits and the acceptance report
``cli``
    command-line front end
"""
from __future__ import annotations

__version__ = "0.1.0"

from .double_ring import DoubleRingSpec
from .errors import (
    BracketError,
    ClassificationError,
    DomainError,
    ModeError,
    NearTangencyWarning,
    NumericalFailure,
    ResonanceError,
    TrackingError,
)
from .single_ring import BoundState, RingSpec

__all__ = [
    "__version__",
    "RingSpec",
    "DoubleRingSpec",
    "BoundState",
    "DomainError",
    "NumericalFailure",
    "BracketError",
    "TrackingError",
    "ClassificationError",
    "ModeError",
    "ResonanceError",
    "NearTangencyWarning",
]
