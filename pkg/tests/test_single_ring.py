from __future__ import annotations

import math

import pytest
from hypothesis import given, settings, strategies as st
from scipy.integrate import quad

from ringspectra import specfun
from ringspectra.single_ring import (
    BoundState,
    RingSpec,
    eigenfunction,
    max_mode,
    solve_mode,
    spectrum,
    xi_single,
)


@pytest.mark.parametrize(
    "gamma,R,expected",
    [(2.0, 1.0, 0), (2.0001, 1.0, 1), (3.0, 1.0, 1), (4.0, 1.0, 1), (10.0, 2.0, 9), (0.5, 0.5, 0)],
)
def test_max_mode_strict_inequality(gamma, R, expected):
    assert max_mode(RingSpec(gamma, R)) == expected


@pytest.mark.parametrize("gamma", [0.0, -1.0])
def test_no_bound_states_without_attraction(gamma):
    ring = RingSpec(gamma, 1.0)
    assert max_mode(ring) is None
    assert spectrum(ring) == []
    assert solve_mode(0, ring) is None


def test_radius_validated():
    with pytest.raises(ValueError):
        RingSpec(1.0, 0.0)


def test_single_mode_example():
    states = spectrum(RingSpec(2.0, 1.0))
    assert len(states) == 1
    s = states[0]
    assert s.m == 0 and s.multiplicity == 1
    assert s.energy == -s.kappa ** 2
    assert xi_single(0, RingSpec(2.0, 1.0), s.kappa) == pytest.approx(0.0, abs=1e-14)


def test_threshold_mode_is_not_bound():
    # at gamma R = 2m the secular function only touches zero as kappa -> 0
    assert solve_mode(1, RingSpec(2.0, 1.0)) is None


@settings(max_examples=40, deadline=None)
@given(gamma=st.floats(0.05, 30.0), R=st.floats(0.2, 5.0))
def test_count_is_2M_plus_1(gamma, R):
    ring = RingSpec(gamma, R)
    states = spectrum(ring)
    top = max_mode(ring)
    assert sum(s.multiplicity for s in states) == 2 * top + 1
    assert [s.energy for s in states] == sorted(s.energy for s in states)


@settings(max_examples=30, deadline=None)
@given(gamma=st.floats(0.3, 12.0), R=st.floats(0.3, 3.0), lam=st.sampled_from([2.0, 5.0, 0.5]))
def test_scaling_covariance(gamma, R, lam):
    base = spectrum(RingSpec(gamma, R))
    scaled = spectrum(RingSpec(gamma * lam, R / lam))
    assert len(base) == len(scaled)
    for a, b in zip(base, scaled):
        assert b.kappa == pytest.approx(lam * a.kappa, rel=1e-10)


def test_ground_state_lowest():
    states = spectrum(RingSpec(10.0, 1.0))
    assert states[0].m == 0
    assert [s.m for s in states] == sorted(s.m for s in states)


@pytest.mark.parametrize("gamma,R,m", [(2.0, 1.0, 0), (6.0, 1.5, 3), (3.0, 0.7, 0), (40.0, 1.0, 5)])
def test_eigenfunction_jump_and_norm(gamma, R, m):
    ring = RingSpec(gamma, R)
    state = solve_mode(m, ring)
    ef = eigenfunction(state, ring)
    assert ef.jump_residual(gamma) <= 1e-9
    # continuity across the ring
    inner = ef.c_inner * specfun.bessel_i(m, state.kappa * R).unscaled
    outer = ef.c_outer * specfun.bessel_k(m, state.kappa * R).unscaled
    assert outer == pytest.approx(inner, rel=1e-14)
    integral = (
        quad(lambda r: ef(r) ** 2 * r, 0.0, R, epsabs=0, epsrel=1e-12, limit=200)[0]
        + quad(lambda r: ef(r) ** 2 * r, R, math.inf, epsabs=0, epsrel=1e-12, limit=200)[0]
    )
    assert ef.norm_squared == pytest.approx(integral, rel=1e-8)


def test_bound_state_multiplicity():
    assert BoundState(0, 1.0).multiplicity == 1
    assert BoundState(3, 1.0).multiplicity == 2
    assert BoundState(3, 0.5).energy == -0.25


def test_negative_mode_folds():
    ring = RingSpec(7.0, 1.0)
    assert solve_mode(-2, ring).kappa == solve_mode(2, ring).kappa


@pytest.mark.parametrize("m", [0, 1, 2])
def test_large_coupling_residual_shrinks(m):
    res = []
    for gamma in (20.0, 40.0, 80.0):
        k = solve_mode(m, RingSpec(gamma, 1.0)).kappa
        res.append(abs(-k * k - (-gamma ** 2 / 4 + (m * m - 0.25))))
    assert 3.5 <= res[0] / res[1] <= 4.5
    assert 3.5 <= res[1] / res[2] <= 4.5


def test_threshold_modes_near_zero_energy():
    # just above gamma R = 2m the new mode binds very weakly
    state = solve_mode(16, RingSpec(32.01, 1.0))
    assert state is not None and 0.0 < state.kappa < 0.5
