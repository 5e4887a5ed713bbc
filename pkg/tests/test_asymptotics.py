from __future__ import annotations

import math

import pytest

from ringspectra import asymptotics as asy
from ringspectra.double_ring import DoubleRingSpec, mode_roots
from ringspectra.errors import ModeError, ResonanceError
from ringspectra.single_ring import RingSpec, solve_mode

GRID = [(1.0, 1.0, 1.0), (0.5, 2.0, 1.0), (1.0, 1.0, 0.1), (1.0, 1.0, 50.0)]


def test_tm_reference_value():
    assert asy.tm(0, 1.0, 1.0, 1.0) == pytest.approx(1.13788762621947, rel=1e-12)


@pytest.mark.parametrize("alpha,beta,R", GRID)
def test_t0_two_formulas_agree(alpha, beta, R):
    a = asy.tm(0, alpha, beta, R)
    b = asy.t0_via_eigenfunction(alpha, beta, R)
    assert abs(a - b) <= 1e-8 * abs(a)


@pytest.mark.parametrize("alpha,beta,R", GRID + [(2.0, 0.3, 0.4), (0.2, 3.0, 2.0)])
def test_sign_law(alpha, beta, R):
    assert math.copysign(1.0, asy.tm(0, alpha, beta, R)) == -math.copysign(1.0, asy.varsigma(alpha, beta, R))


def test_sign_flip_with_radius():
    assert asy.tm(0, 1.0, 1.0, 0.1) < 0.0 < asy.tm(0, 1.0, 1.0, 50.0)


@pytest.mark.parametrize("m,alpha,beta,R", [(0, 1.0, 1.0, 1.0), (1, 1.5, 2.0, 1.0), (2, 0.5, 3.0, 1.5)])
def test_tm_matches_difference_quotients(m, alpha, beta, R):
    # independent of the closed form: root scan at two small separations
    h = 1e-5
    k0 = solve_mode(m, RingSpec(alpha + beta, R)).kappa

    def energy(d):
        roots = mode_roots(m, DoubleRingSpec(alpha, beta, R, d))
        k = min(roots, key=lambda r: abs(r - k0))
        return -k * k

    e0 = -k0 * k0
    s1 = (energy(h) - e0) / h
    s2 = (energy(2 * h) - e0) / (2 * h)
    # Richardson: s(h) = t + c h + O(h^2)
    slope = 2 * s1 - s2
    assert slope == pytest.approx(asy.tm(m, alpha, beta, R), rel=1e-4)


def test_wm_reference_value():
    assert asy.wm(0, 1.0, 1.0, 1.0) == pytest.approx(37.8966, rel=1e-5)


def test_wm_needs_positive_couplings():
    with pytest.raises(ValueError):
        asy.wm(0, 0.0, 1.0, 1.0)
    with pytest.raises(ValueError):
        asy.wm(0, 1.0, -1.0, 1.0)


def test_wm_resonance():
    k = solve_mode(0, RingSpec(1.0, 1.0)).kappa
    with pytest.raises(ResonanceError):
        asy.wm(0, 2.0 * k, 1.0, 1.0)


def test_unbound_mode_raises():
    with pytest.raises(ModeError):
        asy.tm(3, 1.0, 1.0, 1.0)
    with pytest.raises(ModeError):
        asy.wm(2, 1.0, 1.0, 1.0)


def test_models():
    k = solve_mode(0, RingSpec(2.0, 1.0)).kappa
    assert asy.approach_model(0, 1.0, 1.0, 1.0, 0.0) == pytest.approx(-k * k, rel=1e-15)
    assert asy.diverge_model(1, "outer", 2.0, 1.0, 1.0, 50.0) == pytest.approx(-1.0 + 0.75 / 2500.0)
    kb = solve_mode(0, RingSpec(1.0, 1.0)).kappa
    inner = asy.diverge_model(0, "inner", 1.0, 1.0, 1.0, 10.0)
    assert inner == pytest.approx(-kb * kb + asy.wm(0, 1.0, 1.0, 1.0) * math.exp(-20.0 * kb))
    with pytest.raises(ValueError):
        asy.diverge_model(0, "middle", 1.0, 1.0, 1.0, 10.0)
    with pytest.raises(ModeError):
        asy.diverge_model(5, "outer", 1.0, 1.0, 1.0, 2.0)


def test_epsilon():
    assert asy.epsilon(0.5, 3.0) == math.exp(-3.0)


def test_large_coupling_model():
    assert asy.large_coupling_single(1, 4.0, 2.0) == pytest.approx(-4.0 + 0.75 / 4.0)


def test_coefficients_table():
    rows = asy.coefficients(1.0, 1.0, 1.0)
    assert [r.m for r in rows] == [0]
    r = rows[0]
    assert r.E_m == pytest.approx(-r.kappa_m ** 2)
    assert r.t_m == pytest.approx(asy.tm(0, 1.0, 1.0, 1.0))
    assert r.kappa_m_beta == pytest.approx(0.48907318069, rel=1e-10)
    assert r.w_m == pytest.approx(asy.wm(0, 1.0, 1.0, 1.0))
    assert r.varsigma is not None


def test_coefficients_union_of_modes():
    # merged circle binds m = 0..2, inner circle alone m = 0..1
    rows = asy.coefficients(1.0, 3.5, 1.0)
    assert [r.m for r in rows] == [0, 1, 2]
    assert rows[2].kappa_m_beta is None and rows[2].w_m is None
    assert rows[1].w_m is not None


def test_coefficients_without_outer_coupling():
    rows = asy.coefficients(0.0, 2.5, 1.0)
    assert all(r.w_m is None for r in rows)
    assert all(r.t_m is not None for r in rows)
