"""Arbitrary-precision reference values for the Bessel kernel.

Thin wrapper over :mod:`mpmath` used to certify :mod:`ringspectra.specfun`.
Work precision is local to each call, so the global mpmath context is left
untouched.
"""
from __future__ import annotations

import mpmath

__all__ = ["ORACLE_DIGITS", "scaled_ik", "wronskian_residual"]

ORACLE_DIGITS = 40


def scaled_ik(m: int, z: float, digits: int = ORACLE_DIGITS) -> tuple[float, float]:
    """``(exp(-z) I_m(z), exp(z) K_m(z))`` rounded to double from ``digits`` digits."""
    with mpmath.workdps(digits):
        x = mpmath.mpf(z)
        i_val = mpmath.besseli(m, x) * mpmath.exp(-x)
        k_val = mpmath.besselk(m, x) * mpmath.exp(x)
        return float(i_val), float(k_val)


def wronskian_residual(m: int, z: float, digits: int = ORACLE_DIGITS) -> float:
    """``|z (I_m' K_m - K_m' I_m) - 1|`` evaluated in extended precision."""
    with mpmath.workdps(digits):
        x = mpmath.mpf(z)
        i_val = mpmath.besseli(m, x)
        k_val = mpmath.besselk(m, x)
        di = mpmath.diff(lambda t: mpmath.besseli(m, t), x)
        dk = mpmath.diff(lambda t: mpmath.besselk(m, t), x)
        return float(abs(x * (di * k_val - dk * i_val) - 1))
