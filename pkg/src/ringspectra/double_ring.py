r"""Bound states of two concentric delta circles.

Inner circle radius ``R`` with coupling ``beta``, outer circle radius
``R_d = R + d`` with coupling ``alpha``. In mode ``m`` the eigenvalues
:math:`-\kappa^2` are the zeros of

.. math::
    \eta_m(\kappa, d) = \nu_m - \xi_{m,\alpha}\,\xi_{m,\beta},

    \xi_{m,\alpha} = \alpha R_d (K_m I_m)(\kappa R_d) - 1,\quad
    \xi_{m,\beta} = \beta R (K_m I_m)(\kappa R) - 1,

    \nu_m = \alpha\beta R R_d\, K_m^2(\kappa R_d)\, I_m^2(\kappa R).

``nu`` is built from scaled Bessel values and carries the explicit factor
``exp(-2 kappa d)``, so nothing under- or overflows until that factor itself
drops below the smallest double (then it is flushed to ``0``).

:func:`det_oracle` is an independent route to the same zero set: the
determinant of the 4x4 matching system for the coefficients of
``K_m`` (outside), ``K_m, I_m`` (between the circles) and ``I_m`` (inside).
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from . import single_ring, specfun
from .errors import BracketError, NearTangencyWarning
from .single_ring import ROOT_RTOL, BoundState, RingSpec

__all__ = [
    "DoubleRingSpec",
    "SpectralFunctionSample",
    "xi_inner",
    "xi_outer",
    "nu",
    "eta",
    "det_oracle",
    "sample",
    "kappa_grid",
    "mode_roots",
    "spectrum",
]

GEOMETRIC_POINTS = 512
LINEAR_POINTS = 2048


@dataclass(frozen=True)
class DoubleRingSpec:
    """Inner circle ``(R, beta)`` and outer circle ``(R + d, alpha)``."""

    alpha: float
    beta: float
    R: float
    d: float

    def __post_init__(self) -> None:
        if not self.R > 0.0:
            raise ValueError(f"radius must be positive, got R={self.R}")
        if not self.d >= 0.0:
            raise ValueError(f"separation must be non-negative, got d={self.d}")

    @property
    def R_d(self) -> float:
        return self.R + self.d

    @property
    def kappa_cap(self) -> float:
        return max(self.alpha + self.beta, self.alpha, self.beta) + 2.0 / self.R


@dataclass(frozen=True)
class SpectralFunctionSample:
    m: int
    kappa: float
    eta: float
    nu: float
    xi_product: float
    det_oracle: float


def _product(v: specfun.ScaledIK, m: int, z: float) -> float:
    if v.i > 1e-290 and v.k < 1e290:
        return v.i * v.k
    return specfun.product_ik(m, z)


def _parts(m: int, spec: DoubleRingSpec, kappa: float) -> tuple[float, float, float]:
    """``(xi_alpha, xi_beta, nu)`` at one ``kappa``."""
    m = abs(m)
    z_in, z_out = kappa * spec.R, kappa * spec.R_d
    a = specfun.scaled_ik(m, z_in)
    b = a if spec.d == 0.0 else specfun.scaled_ik(m, z_out)
    xi_a = spec.alpha * spec.R_d * _product(b, m, z_out) - 1.0
    xi_b = spec.beta * spec.R * _product(a, m, z_in) - 1.0
    pre = spec.alpha * spec.beta * spec.R * spec.R_d
    if pre == 0.0 or 2.0 * kappa * spec.d >= 745.0:
        return xi_a, xi_b, 0.0
    if a.i > 1e-150 and b.k < 1e150:
        nu_val = pre * (b.k * a.i) ** 2 * math.exp(-2.0 * kappa * spec.d)
    else:
        la = specfun.log_ik(m, z_in)
        lb = specfun.log_ik(m, z_out)
        # unscaled logs already carry the factor exp(-2 kappa d)
        nu_val = pre * math.exp(2.0 * (la.log_i + lb.log_k))
    return xi_a, xi_b, nu_val


def xi_outer(m: int, spec: DoubleRingSpec, kappa: float) -> float:
    """``alpha R_d (K_m I_m)(kappa R_d) - 1``: secular function of the outer circle alone."""
    return spec.alpha * spec.R_d * specfun.product_ik(abs(m), kappa * spec.R_d) - 1.0


def xi_inner(m: int, spec: DoubleRingSpec, kappa: float) -> float:
    return spec.beta * spec.R * specfun.product_ik(abs(m), kappa * spec.R) - 1.0


def nu(m: int, spec: DoubleRingSpec, kappa: float) -> float:
    """Coupling term; proportional to ``exp(-2 kappa d)`` and flushed to 0 on underflow."""
    return _parts(m, spec, kappa)[2]


def eta(m: int, spec: DoubleRingSpec, kappa: float) -> float:
    """Spectral function whose zeros in ``kappa`` are the bound states of mode ``m``."""
    xi_a, xi_b, nu_val = _parts(m, spec, kappa)
    return nu_val - xi_a * xi_b


def det_oracle(m: int, spec: DoubleRingSpec, kappa: float) -> float:
    """Determinant of the equilibrated 4x4 boundary-matching matrix.

    Columns are the coefficients of ``K_m`` (r > R_d), ``K_m`` and ``I_m``
    (R < r < R_d) and ``I_m`` (r < R). Each entry is held as a sign, a
    modest mantissa and a logarithm of the Bessel factor; rows and then
    columns are scaled to unit max-norm in log space before exponentiating,
    so no intermediate leaves double range. Only the zero set is meaningful.
    """
    m = abs(m)
    a = specfun.log_ik(m, kappa * spec.R)
    b = specfun.log_ik(m, kappa * spec.R_d)
    # logarithmic derivatives times kappa: kappa Z'/Z
    dia = kappa * (a.i_ratio + m / (kappa * spec.R))
    dka = -kappa * (a.k_ratio + m / (kappa * spec.R))
    dib = kappa * (b.i_ratio + m / (kappa * spec.R_d))
    dkb = -kappa * (b.k_ratio + m / (kappa * spec.R_d))
    al, be = spec.alpha, spec.beta
    mant = [
        [1.0, -1.0, -1.0, 0.0],
        [dkb + al, -dkb, -dib, 0.0],
        [0.0, 1.0, 1.0, -1.0],
        [0.0, dka, dia, be - dia],
    ]
    logs = [
        [b.log_k, b.log_k, b.log_i, 0.0],
        [b.log_k, b.log_k, b.log_i, 0.0],
        [0.0, a.log_k, a.log_i, a.log_i],
        [0.0, a.log_k, a.log_i, a.log_i],
    ]
    lm = [
        [lg + math.log(abs(x)) if x != 0.0 else -math.inf for x, lg in zip(mrow, lrow)]
        for mrow, lrow in zip(mant, logs)
    ]
    for row in lm:
        top = max(row)
        row[:] = [v - top for v in row]
    for j in range(4):
        top = max(row[j] for row in lm)
        for row in lm:
            row[j] -= top
    mat = [
        [math.copysign(math.exp(v), x) if x != 0.0 else 0.0 for x, v in zip(mrow, row)]
        for mrow, row in zip(mant, lm)
    ]
    return _det4_lower_zeros(mat)


def _det3(a, b, c) -> float:
    return (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
    )


def _det4_lower_zeros(mat) -> float:
    """Determinant of a 4x4 matrix whose first column is zero below row 1."""
    r0, r1, r2, r3 = (row[1:] for row in mat)
    return mat[0][0] * _det3(r1, r2, r3) - mat[1][0] * _det3(r0, r2, r3)


def sample(m: int, spec: DoubleRingSpec, kappa: float) -> SpectralFunctionSample:
    xi_a, xi_b, nu_val = _parts(m, spec, kappa)
    return SpectralFunctionSample(
        m=m,
        kappa=kappa,
        eta=nu_val - xi_a * xi_b,
        nu=nu_val,
        xi_product=xi_a * xi_b,
        det_oracle=det_oracle(m, spec, kappa),
    )


def kappa_grid(spec: DoubleRingSpec) -> np.ndarray:
    """Scan grid: geometric near zero, linear up to ``kappa_cap``."""
    cap = spec.kappa_cap
    head = np.geomspace(1e-6 / spec.R, 0.1 * cap, GEOMETRIC_POINTS)
    tail = np.linspace(0.1 * cap, cap, LINEAR_POINTS)
    return np.concatenate([head, tail[1:]])


_FUNCTIONS: dict[str, Callable[[int, DoubleRingSpec, float], float]] = {
    "eta": eta,
    "det": det_oracle,
}


def _split_tangency(f, m, spec, k0, k1, k2, v1) -> list[tuple[float, float]]:
    """Look for a hidden pair of roots around a local minimum of ``|f|``."""
    sign = 1.0 if v1 > 0.0 else -1.0
    res = minimize_scalar(
        lambda k: sign * f(m, spec, k),
        bounds=(k0, k2),
        method="bounded",
        options={"xatol": 1e-14 * k1},
    )
    k_min = float(res.x)
    v_min = float(res.fun)  # |f| at the dip, negative only on a sign change
    if v_min < 0.0:
        return [(k0, k_min), (k_min, k2)]
    scale = max(abs(f(m, spec, k0)), abs(f(m, spec, k2)), 1e-300)
    if v_min < 1e-10 * scale:
        warnings.warn(
            f"mode {m}: |spectral function| dips to {v_min:.3g} near kappa={k_min:.12g} "
            f"without a sign change; possible tangency in [{k0:.6g}, {k2:.6g}]",
            NearTangencyWarning,
            stacklevel=3,
        )
    return []


def mode_roots(m: int, spec: DoubleRingSpec, function: str = "eta") -> list[float]:
    """All roots in ``kappa`` of ``eta`` (or of ``det_oracle``) for mode ``m``, ascending.

    Roots are bracketed on :func:`kappa_grid`, so states bound more weakly
    than ``kappa = 1e-6 / R`` are not resolved. Near-tangent root pairs that
    the grid straddles are split at the local minimum of ``|f|``; a dip to
    rounding level without a sign change raises :class:`NearTangencyWarning`.
    """
    f = _FUNCTIONS[function]
    m = abs(m)
    grid = kappa_grid(spec)
    values = np.array([f(m, spec, k) for k in grid])
    brackets: list[tuple[float, float]] = []
    for i in range(len(grid) - 1):
        v0, v1 = values[i], values[i + 1]
        if v0 == 0.0:
            brackets.append((grid[i], grid[i]))
        elif v0 * v1 < 0.0:
            brackets.append((grid[i], grid[i + 1]))
        elif (
            0 < i
            and values[i - 1] * v0 > 0.0
            and abs(v0) < abs(values[i - 1])
            and abs(v0) < abs(v1)
        ):
            brackets.extend(_split_tangency(f, m, spec, grid[i - 1], grid[i], grid[i + 1], v0))
    roots = []
    for lo, hi in brackets:
        if lo == hi:
            roots.append(float(lo))
            continue
        try:
            roots.append(brentq(lambda k: f(m, spec, k), lo, hi, xtol=1e-300, rtol=ROOT_RTOL))
        except ValueError as exc:
            raise BracketError(f"mode {m}: lost bracket [{lo:.17g}, {hi:.17g}]") from exc
    return sorted(roots)


def _mode_cap(spec: DoubleRingSpec) -> int:
    # no roots once 2|m| >= R_d * max(alpha + beta, alpha, beta)
    g = spec.R_d * max(spec.alpha + spec.beta, spec.alpha, spec.beta)
    return max(int(math.ceil(0.5 * g)), 0)


def spectrum(spec: DoubleRingSpec, function: str = "eta") -> list[BoundState]:
    """All bound states sorted by energy, each mode ``m > 0`` with multiplicity 2.

    ``d = 0`` delegates to the single circle with coupling ``alpha + beta``.
    Modes are scanned upward until two consecutive modes have no root, or
    the hard cap on ``m`` is reached.
    """
    if spec.d == 0.0:
        return single_ring.spectrum(RingSpec(spec.alpha + spec.beta, spec.R))
    if max(spec.alpha + spec.beta, spec.alpha, spec.beta) <= 0.0:
        return []
    states: list[BoundState] = []
    empty = 0
    for m in range(_mode_cap(spec) + 1):
        roots = mode_roots(m, spec, function)
        states.extend(BoundState(m, k) for k in roots)
        empty = 0 if roots else empty + 1
        if empty == 2:
            break
    return sorted(states, key=lambda s: s.energy)
