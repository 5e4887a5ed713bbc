r"""Integer-order modified Bessel functions :math:`I_m`, :math:`K_m`.

Every spectral function in this package is assembled from the exponentially
scaled values

.. math::
    \tilde I_m(z) = e^{-z} I_m(z), \qquad \tilde K_m(z) = e^{z} K_m(z),

which stay finite for all arguments of interest. Products such as
:math:`I_m K_m` need no exponential factors at all, and factors like
:math:`K_m^2(\kappa R_d) I_m^2(\kappa R)` reduce to scaled values times
:math:`e^{-2\kappa d}`.

Evaluation strategy
-------------------
* :math:`\tilde I_m`: power series for ``z <= max(12, 2m)``, Miller's backward
  recurrence normalised by :math:`e^z = I_0 + 2\sum_{k\ge1} I_k` above.
* :math:`\tilde K_m`: scaled :math:`K_0, K_1` from SciPy's Cephes routines,
  then forward recurrence in the order, which is stable for :math:`K`.

Note on the large-argument form of :math:`I_m`: the standard expansion is
:math:`I_m(z) \approx e^z/\sqrt{2\pi z}\,(1 - (4m^2-1)/(8z) + \dots)`. The
kernel follows that form; a variant without the :math:`1/\sqrt{z}` factor
would violate the Wronskian :math:`I_m'K_m - K_m'I_m = 1/z`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from scipy.special import k0e as _k0e, k1e as _k1e

__all__ = [
    "DomainError",
    "BesselValue",
    "ScaledIK",
    "bessel_i",
    "bessel_k",
    "bessel_i_prime",
    "bessel_k_prime",
    "product_ik",
    "product_ik_prime",
    "scaled_ik",
    "LogIK",
    "log_ik",
]

_EPS = 1e-17
_RESCALE = 1e200
_NORMAL_MIN = 1e-290
_NORMAL_MAX = 1e290


class DomainError(ValueError):
    """Argument outside the domain of a Bessel function."""


@dataclass(frozen=True)
class BesselValue:
    """Value of :math:`I_m(z)` or :math:`K_m(z)` with its scaled companion.

    ``scaled`` is ``exp(-z) * I_m(z)`` for :math:`I` and ``exp(z) * K_m(z)``
    for :math:`K`. ``unscaled`` is ``inf`` or ``0.0`` where the plain value
    is not representable in double precision.
    """

    order: int
    z: float
    scaled: float
    unscaled: float


class ScaledIK(NamedTuple):
    """Scaled values and derivatives at one argument.

    ``i = e^{-z} I_m(z)``, ``di = e^{-z} I_m'(z)``, ``k = e^{z} K_m(z)``,
    ``dk = e^{z} K_m'(z)``.
    """

    i: float
    di: float
    k: float
    dk: float


def _check(m: int, z: float, allow_zero: bool) -> None:
    if m < 0:
        raise DomainError(f"negative order m={m}; fold to |m| before calling")
    if not math.isfinite(z) or z < 0.0 or (z == 0.0 and not allow_zero):
        raise DomainError(f"argument z={z} outside the domain")


def _in_range(small: float, large: float) -> bool:
    """True when neither value has left the normal double range."""
    return small > _NORMAL_MIN and large < _NORMAL_MAX


def _rescale_exp(value: float, exponent: float) -> float:
    """``value * exp(exponent)`` with overflow mapped to ``inf``."""
    if value == 0.0:
        return 0.0
    try:
        return value * math.exp(exponent)
    except OverflowError:
        return math.copysign(math.inf, value)


# ---------------------------------------------------------------------------
# I_m
# ---------------------------------------------------------------------------

def _i_series_sum(m: int, q: float) -> float:
    term = 1.0
    total = 1.0
    k = 0
    while True:
        k += 1
        term *= q / (k * (m + k))
        total += term
        if term < _EPS * total:
            return total


def _i_series_scaled(m: int, z: float) -> float:
    if z == 0.0:
        return 1.0 if m == 0 else 0.0
    total = _i_series_sum(m, 0.25 * z * z)
    log_lead = m * math.log(0.5 * z) - math.lgamma(m + 1.0) - z
    return total * math.exp(log_lead)


def _i_miller_scaled(m: int, z: float) -> tuple[float, float]:
    """Scaled ``(I_m, I_{m+1})`` by backward recurrence."""
    n_top = m + int(math.sqrt(90.0 * z)) + 30
    y_next = 0.0
    y = 1e-30
    total = 0.0
    i_m = i_m1 = 0.0
    two_over_z = 2.0 / z
    for k in range(n_top, 0, -1):
        # y holds I_k, y_next holds I_{k+1}
        if k == m:
            i_m = y
        elif k == m + 1:
            i_m1 = y
        total += 2.0 * y
        y_prev = k * two_over_z * y + y_next
        y_next, y = y, y_prev
        if y > _RESCALE:
            y /= _RESCALE
            y_next /= _RESCALE
            total /= _RESCALE
            i_m /= _RESCALE
            i_m1 /= _RESCALE
    total += y
    if m == 0:
        i_m = y
    return i_m / total, i_m1 / total


def _scaled_i_pair(m: int, z: float) -> tuple[float, float]:
    if z <= max(12.0, 2.0 * m):
        return _i_series_scaled(m, z), _i_series_scaled(m + 1, z)
    return _i_miller_scaled(m, z)


# ---------------------------------------------------------------------------
# K_m
# ---------------------------------------------------------------------------

def _k01_scaled(z: float) -> tuple[float, float]:
    """Scaled ``(K_0, K_1)`` from the Cephes routines shipped with SciPy."""
    return float(_k0e(z)), float(_k1e(z))


def _scaled_k_triple(m: int, z: float) -> tuple[float, float, float]:
    """Scaled ``(K_{m-1}, K_m, K_{m+1})`` with ``K_{-1} = K_1``."""
    k0, k1 = _k01_scaled(z)
    ks = [k0, k1]
    for n in range(1, m + 1):
        ks.append(ks[n - 1] + (2.0 * n / z) * ks[n])
    return ks[abs(m - 1)], ks[m], ks[m + 1]


# ---------------------------------------------------------------------------
# public API
# ---------------------------------------------------------------------------

def scaled_ik(m: int, z: float) -> ScaledIK:
    """Scaled :math:`I_m, I_m', K_m, K_m'` at ``z > 0`` in one pass."""
    _check(m, z, allow_zero=False)
    i_m, i_m1 = _scaled_i_pair(m, z)
    k_mm1, k_m, _ = _scaled_k_triple(m, z)
    # I'_m = I_{m+1} + (m/z) I_m and K'_m = -K_{m-1} - (m/z) K_m keep equal signs
    di = i_m1 + (m / z) * i_m
    dk = -k_mm1 - (m / z) * k_m
    return ScaledIK(i_m, di, k_m, dk)


class LogIK(NamedTuple):
    """Logarithmic form of :math:`I_m, K_m` for arguments where they leave double range.

    ``log_i = ln I_m(z)`` and ``log_k = ln K_m(z)`` (unscaled);
    ``i_ratio = I_{m+1}(z)/I_m(z)`` and ``k_ratio = K_{m-1}(z)/K_m(z)``, with
    ``K_{-1} = K_1``. The logarithmic derivatives follow as
    ``I'/I = i_ratio + m/z`` and ``K'/K = -k_ratio - m/z``.
    """

    log_i: float
    i_ratio: float
    log_k: float
    k_ratio: float


def log_ik(m: int, z: float) -> LogIK:
    """:class:`LogIK` at ``z > 0``; finite for every ``m`` and ``z`` in double range."""
    _check(m, z, allow_zero=False)
    if z <= max(12.0, 2.0 * m):
        q = 0.25 * z * z
        s_m = _i_series_sum(m, q)
        s_m1 = _i_series_sum(m + 1, q)
        log_i = math.log(s_m) + m * math.log(0.5 * z) - math.lgamma(m + 1.0)
        i_ratio = (s_m1 / s_m) * (0.5 * z) / (m + 1.0)
    else:
        i_m, i_m1 = _i_miller_scaled(m, z)
        log_i = math.log(i_m) + z
        i_ratio = i_m1 / i_m
    k0, k1 = _k01_scaled(z)
    log_k = math.log(k0) - z
    ratio = k1 / k0  # K_{n+1}/K_n, starting at n = 0
    prev_ratio = ratio  # K_{m-1}/K_m for m = 0 is K_1/K_0
    for n in range(1, m + 1):
        log_k += math.log(ratio)
        prev_ratio = 1.0 / ratio
        ratio = prev_ratio + 2.0 * n / z
    return LogIK(log_i, i_ratio, log_k, prev_ratio)


def bessel_i(m: int, z: float) -> BesselValue:
    """Modified Bessel function of the first kind, :math:`I_m(z)`, ``z >= 0``."""
    _check(m, z, allow_zero=True)
    if z == 0.0:
        value = 1.0 if m == 0 else 0.0
        return BesselValue(m, 0.0, value, value)
    scaled = _scaled_i_pair(m, z)[0]
    return BesselValue(m, z, scaled, _rescale_exp(scaled, z))


def bessel_k(m: int, z: float) -> BesselValue:
    """Modified Bessel function of the second kind, :math:`K_m(z)`, ``z > 0``."""
    _check(m, z, allow_zero=False)
    scaled = _scaled_k_triple(m, z)[1]
    return BesselValue(m, z, scaled, _rescale_exp(scaled, -z))


def bessel_i_prime(m: int, z: float) -> float:
    """:math:`I_m'(z) = (I_{m-1}(z) + I_{m+1}(z))/2`."""
    _check(m, z, allow_zero=True)
    if z == 0.0:
        return 0.5 if m == 1 else 0.0
    if m == 0:
        return bessel_i(1, z).unscaled
    i_m, i_m1 = _scaled_i_pair(m, z)
    return _rescale_exp(i_m1 + (m / z) * i_m, z)


def bessel_k_prime(m: int, z: float) -> float:
    """:math:`K_m'(z) = -(K_{m-1}(z) + K_{m+1}(z))/2`."""
    _check(m, z, allow_zero=False)
    k_mm1, k_m, _ = _scaled_k_triple(m, z)
    return _rescale_exp(-k_mm1 - (m / z) * k_m, -z)


def product_ik(m: int, z: float) -> float:
    """:math:`(I_m K_m)(z)`, free of exponential factors."""
    _check(m, z, allow_zero=False)
    i_m = _scaled_i_pair(m, z)[0]
    k_mm1, k_m, _ = _scaled_k_triple(m, z)
    if _in_range(i_m, k_m):
        return i_m * k_m
    v = log_ik(m, z)
    return math.exp(v.log_i + v.log_k)


def product_ik_prime(m: int, z: float) -> float:
    """:math:`(I_m K_m)'(z)`; negative for all ``z > 0``.

    Equal to :math:`I_m' K_m + I_m K_m'`. The ``m/z`` parts of the two
    derivatives cancel identically, so it is evaluated as
    :math:`I_{m+1} K_m - I_m K_{m-1}`, which keeps full relative accuracy for
    small ``z`` and large ``m``.
    """
    _check(m, z, allow_zero=False)
    i_m, i_m1 = _scaled_i_pair(m, z)
    k_mm1, k_m, _ = _scaled_k_triple(m, z)
    if _in_range(i_m1, k_m):
        return i_m1 * k_m - i_m * k_mm1
    # I_m underflowed or K_m overflowed: factor out the product I_m K_m
    v = log_ik(m, z)
    return math.exp(v.log_i + v.log_k) * (v.i_ratio - v.k_ratio)
