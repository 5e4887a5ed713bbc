r"""Bound states of one attractive delta circle.

The operator :math:`-\Delta - \gamma\,\delta_{C_R}` separates in polar
coordinates. For angular mode ``m`` a bound state :math:`E = -\kappa^2`
exists iff

.. math::
    \gamma R\, (I_m K_m)(\kappa R) = 1,

which has exactly one root when :math:`2|m| < \gamma R` because
:math:`I_m K_m` decreases monotonically from its value at zero to ``0``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.optimize import brentq

from . import specfun
from .errors import BracketError

__all__ = [
    "RingSpec",
    "BoundState",
    "RadialEigenfunction",
    "max_mode",
    "xi_single",
    "solve_mode",
    "spectrum",
    "eigenfunction",
]

ROOT_RTOL = 4 * 2.220446049250313e-16


@dataclass(frozen=True)
class RingSpec:
    """A circle of radius ``R`` carrying coupling ``gamma`` (attractive if > 0)."""

    gamma: float
    R: float

    def __post_init__(self) -> None:
        if not self.R > 0.0:
            raise ValueError(f"radius must be positive, got R={self.R}")


@dataclass(frozen=True)
class BoundState:
    """Eigenvalue ``-kappa**2`` in angular mode ``m`` (shared by ``-m``)."""

    m: int
    kappa: float

    @property
    def energy(self) -> float:
        return -self.kappa * self.kappa

    @property
    def multiplicity(self) -> int:
        return 1 if self.m == 0 else 2


@dataclass(frozen=True)
class RadialEigenfunction:
    r"""Radial profile :math:`\varrho_m` of a single-ring eigenfunction.

    ``rho(r) = c_inner * I_m(kappa r)`` inside and ``c_outer * K_m(kappa r)``
    outside, with ``c_inner = 1``. The full eigenfunction is
    :math:`(2\pi)^{-1/2}\varrho_m(r) e^{im\phi}`, so ``norm_squared`` equals
    :math:`\int_0^\infty \varrho_m(r)^2\, r\, dr`.

    Coefficients are stored unscaled; they overflow once ``kappa * R``
    exceeds roughly 350.
    """

    m: int
    kappa: float
    R: float
    c_outer: float
    c_inner: float
    norm_squared: float

    def __call__(self, r: float) -> float:
        z = self.kappa * r
        if r < self.R:
            return self.c_inner * specfun.bessel_i(self.m, z).unscaled
        return self.c_outer * specfun.bessel_k(self.m, z).unscaled

    def value_at_ring(self) -> float:
        return self.c_inner * specfun.bessel_i(self.m, self.kappa * self.R).unscaled

    def outer_slope_at_ring(self) -> float:
        """:math:`\\lim_{r\\to R^+} \\varrho_m'(r)`."""
        return self.c_outer * self.kappa * specfun.bessel_k_prime(self.m, self.kappa * self.R)

    def inner_slope_at_ring(self) -> float:
        return self.c_inner * self.kappa * specfun.bessel_i_prime(self.m, self.kappa * self.R)

    def jump_residual(self, gamma: float) -> float:
        """Relative violation of :math:`\\varrho'(R^+) - \\varrho'(R^-) = -\\gamma \\varrho(R)`."""
        lhs = self.outer_slope_at_ring() - self.inner_slope_at_ring()
        rhs = -gamma * self.value_at_ring()
        return abs(lhs - rhs) / abs(rhs)


def max_mode(spec: RingSpec) -> int | None:
    """Largest ``m`` with ``2|m| < gamma R``; ``None`` if ``gamma R <= 0``."""
    g = spec.gamma * spec.R
    if not g > 0.0:
        return None
    m = math.floor(0.5 * g)
    if 2 * m >= g:
        m -= 1
    return m


def xi_single(m: int, spec: RingSpec, kappa: float) -> float:
    """Secular function ``gamma R (I_m K_m)(kappa R) - 1``."""
    return spec.gamma * spec.R * specfun.product_ik(abs(m), kappa * spec.R) - 1.0


def solve_mode(m: int, spec: RingSpec) -> BoundState | None:
    """Unique bound state of mode ``m``, or ``None`` when the mode is not bound."""
    m = abs(m)
    top = max_mode(spec)
    if top is None or m > top:
        return None
    lo = 1e-9 / spec.R
    hi = spec.gamma
    f_lo = xi_single(m, spec, lo)
    # weak coupling puts the root exponentially close to 0 (~exp(-1/(gamma R)) for m = 0)
    while f_lo <= 0.0 and lo * spec.R > 1e-290:
        lo *= 1e-6
        f_lo = xi_single(m, spec, lo)
    f_hi = xi_single(m, spec, hi)
    if f_hi >= 0.0:
        hi *= 4.0
        f_hi = xi_single(m, spec, hi)
    if f_lo <= 0.0:
        raise BracketError(
            f"mode m={m}: root lies below kappa R = {lo * spec.R:g}, "
            "outside double precision (coupling too weak)"
        )
    if not (f_lo > 0.0 > f_hi):
        raise BracketError(
            f"no sign change of the secular function for m={m} on "
            f"[{lo:g}, {hi:g}] (values {f_lo:g}, {f_hi:g})"
        )
    kappa = brentq(lambda k: xi_single(m, spec, k), lo, hi, xtol=1e-300, rtol=ROOT_RTOL)
    return BoundState(m, kappa)


def spectrum(spec: RingSpec) -> list[BoundState]:
    """All bound states sorted by energy; total multiplicity ``2 M + 1``."""
    top = max_mode(spec)
    if top is None:
        return []
    states = [solve_mode(m, spec) for m in range(top + 1)]
    return sorted(states, key=lambda s: s.energy)


def eigenfunction(state: BoundState, spec: RingSpec) -> RadialEigenfunction:
    """Radial eigenfunction of ``state`` normalised by ``c_inner = 1``.

    The norm uses the closed form
    ``-R (I_m K_m)'(kappa R) / (2 kappa K_m(kappa R)**2)``, obtained from
    the indefinite integral of ``x Z_m(x)**2`` and the Wronskian.
    """
    m, kappa, R = abs(state.m), state.kappa, spec.R
    z = kappa * R
    i_val = specfun.bessel_i(m, z).unscaled
    k_val = specfun.bessel_k(m, z).unscaled
    c_outer = i_val / k_val
    norm_squared = -R * specfun.product_ik_prime(m, z) / (2.0 * kappa * k_val * k_val)
    return RadialEigenfunction(m, kappa, R, c_outer, 1.0, norm_squared)
