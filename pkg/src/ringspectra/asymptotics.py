r"""Closed-form coefficients for eigenvalues of two circles at small and large gaps.

Approaching circles (``d -> 0``): each eigenvalue of the merged circle with
coupling ``alpha + beta`` moves linearly,

.. math::
    E_m(d) = E_m + t_m d + o(d),\qquad
    t_m = \frac{2\kappa_m P\,(-\alpha\beta R P + \alpha\kappa_m R P' + \alpha P)}{R P'},

with ``P = I_m K_m`` and ``P'`` its derivative, both at ``R kappa_m``.

Diverging circles (``d -> oo``): eigenvalues split into an outer branch near
``-alpha**2/4 + (m**2 - 1/4)/d**2`` and an inner branch near the
eigenvalues ``E_{m,beta}`` of the inner circle alone,

.. math::
    E_{m,\beta} + w_m \varepsilon,\qquad \varepsilon = e^{-2d\kappa_{m,\beta}},\qquad
    w_m = \frac{\pi\alpha\beta R\, e^{-2\kappa R} I_m(R\kappa)^2}
               {(1 - \alpha/(2\kappa))\,\xi'_{m,\beta}(\kappa)}
    \Big|_{\kappa=\kappa_{m,\beta}}.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from . import specfun
from .errors import ModeError, ResonanceError
from .single_ring import RingSpec, eigenfunction, max_mode, solve_mode

__all__ = [
    "AsymptoticCoefficients",
    "RESONANCE_RTOL",
    "tm",
    "t0_via_eigenfunction",
    "varsigma",
    "wm",
    "approach_model",
    "diverge_model",
    "large_coupling_single",
    "epsilon",
    "coefficients",
]

RESONANCE_RTOL = 1e-6


@dataclass(frozen=True)
class AsymptoticCoefficients:
    """Model parameters for one angular mode.

    ``E_m``, ``kappa_m`` and ``t_m`` refer to the merged circle
    ``(alpha + beta, R)``; ``kappa_m_beta`` and ``w_m`` to the inner circle
    ``(beta, R)``. Entries are ``None`` where the mode is not bound or the
    coefficient is undefined. ``varsigma`` is only filled for ``m = 0``.
    """

    m: int
    E_m: float | None
    kappa_m: float | None
    t_m: float | None
    kappa_m_beta: float | None
    w_m: float | None
    varsigma: float | None = None


def _kappa(m: int, gamma: float, R: float) -> float:
    state = solve_mode(m, RingSpec(gamma, R)) if gamma > 0.0 else None
    if state is None:
        raise ModeError(f"mode m={m} is not bound for coupling {gamma} and R={R}")
    return state.kappa


def tm(m: int, alpha: float, beta: float, R: float) -> float:
    """First-order slope ``dE_m/dd`` at ``d = 0``."""
    m = abs(m)
    kappa = _kappa(m, alpha + beta, R)
    z = R * kappa
    p = specfun.product_ik(m, z)
    dp = specfun.product_ik_prime(m, z)
    return 2.0 * kappa * p * (-alpha * beta * R * p + alpha * kappa * R * dp + alpha * p) / (R * dp)


def t0_via_eigenfunction(alpha: float, beta: float, R: float) -> float:
    r"""``t_0`` from the ground state :math:`f_0` of the merged circle.

    .. math::
        t_0 = \frac{-\alpha\left(\oint \partial_r^+ |f_0|^2 ds
              + \alpha \oint |f_0|^2 ds\right) - \frac{\alpha}{R}\oint |f_0|^2 ds}
              {\|f_0\|^2}

    With :math:`f_0 = (2\pi)^{-1/2}\varrho_0`, the circle integrals are
    ``R rho(R)**2`` and ``2 R rho(R) rho'(R+)``.
    """
    ring = RingSpec(alpha + beta, R)
    state = solve_mode(0, ring) if ring.gamma > 0.0 else None
    if state is None:
        raise ModeError(f"no ground state for coupling {alpha + beta} and R={R}")
    ef = eigenfunction(state, ring)
    rho = ef.value_at_ring()
    mass = R * rho * rho
    flux = 2.0 * R * rho * ef.outer_slope_at_ring()
    return (-alpha * (flux + alpha * mass) - alpha / R * mass) / ef.norm_squared


def varsigma(alpha: float, beta: float, R: float) -> float:
    """Sign discriminant of ``t_0``: ``sign(varsigma) == -sign(t_0)``."""
    kappa = _kappa(0, alpha + beta, R)
    z = R * kappa
    p = specfun.product_ik(0, z)
    dp = specfun.product_ik_prime(0, z)
    return alpha * (1.0 - beta * R) * p + alpha * kappa * R * dp


def wm(m: int, alpha: float, beta: float, R: float) -> float:
    """Prefactor of ``exp(-2 d kappa_{m,beta})`` in the inner-branch shift."""
    if not (alpha > 0.0 and beta > 0.0):
        raise ValueError("w_m needs positive couplings alpha and beta")
    m = abs(m)
    kappa = _kappa(m, beta, R)
    if abs(kappa - 0.5 * alpha) < RESONANCE_RTOL * abs(alpha):
        raise ResonanceError(
            f"kappa_{{m,beta}}={kappa:.12g} coincides with alpha/2={0.5 * alpha:.12g}"
        )
    i_scaled = specfun.bessel_i(m, R * kappa).scaled
    # e^{-2 kappa R} I_m(R kappa)^2 is the squared scaled value
    xi_prime = beta * R * R * specfun.product_ik_prime(m, R * kappa)
    return math.pi * alpha * beta * R * i_scaled * i_scaled / ((1.0 - alpha / (2.0 * kappa)) * xi_prime)


def epsilon(kappa: float, d: float) -> float:
    """Exponential smallness parameter ``exp(-2 d kappa)``."""
    return math.exp(-2.0 * d * kappa)


def approach_model(m: int, alpha: float, beta: float, R: float, d: float) -> float:
    """``E_m + t_m d``."""
    kappa = _kappa(abs(m), alpha + beta, R)
    return -kappa * kappa + tm(m, alpha, beta, R) * d


def diverge_model(m: int, branch: str, alpha: float, beta: float, R: float, d: float) -> float:
    """Large-``d`` eigenvalue model on the ``"outer"`` or ``"inner"`` branch."""
    m = abs(m)
    if branch == "outer":
        top = max_mode(RingSpec(alpha, R + d))
        if top is None or m > top:
            raise ModeError(f"mode m={m} is not bound on the outer circle at d={d}")
        return -0.25 * alpha * alpha + (m * m - 0.25) / (d * d)
    if branch == "inner":
        kappa = _kappa(m, beta, R)
        return -kappa * kappa + wm(m, alpha, beta, R) * epsilon(kappa, d)
    raise ValueError(f"unknown branch {branch!r}; expected 'outer' or 'inner'")


def large_coupling_single(m: int, gamma: float, R: float) -> float:
    """Strong-coupling eigenvalue model ``-gamma**2/4 + (m**2 - 1/4)/R**2``."""
    return -0.25 * gamma * gamma + (m * m - 0.25) / (R * R)


def coefficients(alpha: float, beta: float, R: float) -> list[AsymptoticCoefficients]:
    """Coefficients for every mode bound in the merged or the inner circle."""
    top_merged = max_mode(RingSpec(alpha + beta, R))
    top_inner = max_mode(RingSpec(beta, R))
    tops = [t for t in (top_merged, top_inner) if t is not None]
    rows = []
    for m in range(max(tops) + 1 if tops else 0):
        e_m = k_m = t_m = k_b = w_m = sigma = None
        if top_merged is not None and m <= top_merged:
            k_m = _kappa(m, alpha + beta, R)
            e_m = -k_m * k_m
            t_m = tm(m, alpha, beta, R)
            if m == 0:
                sigma = varsigma(alpha, beta, R)
        if top_inner is not None and m <= top_inner:
            k_b = _kappa(m, beta, R)
            if alpha > 0.0:
                try:
                    w_m = wm(m, alpha, beta, R)
                except ResonanceError:
                    w_m = None
        rows.append(AsymptoticCoefficients(m, e_m, k_m, t_m, k_b, w_m, sigma))
    return rows
