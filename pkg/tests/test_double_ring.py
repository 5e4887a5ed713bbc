from __future__ import annotations

import math
import warnings

import numpy as np
import pytest

from ringspectra import double_ring as dr
from ringspectra.double_ring import DoubleRingSpec
from ringspectra.single_ring import RingSpec, spectrum as single_spectrum


def test_spec_validation():
    with pytest.raises(ValueError):
        DoubleRingSpec(1.0, 1.0, -1.0, 0.5)
    with pytest.raises(ValueError):
        DoubleRingSpec(1.0, 1.0, 1.0, -0.1)
    spec = DoubleRingSpec(2.0, 1.0, 1.0, 3.0)
    assert spec.R_d == 4.0


@pytest.mark.parametrize("alpha,beta,R", [(1.0, 1.0, 1.0), (0.5, 2.0, 1.0), (2.0, 0.5, 0.3), (3.0, 4.0, 2.0)])
def test_zero_separation_matches_single_ring(alpha, beta, R):
    ref = single_spectrum(RingSpec(alpha + beta, R))
    for a, b in ((alpha, beta), (beta, alpha)):
        spec = DoubleRingSpec(a, b, R, 0.0)
        # go through the scanner, not the delegation inside spectrum()
        for state in ref:
            roots = dr.mode_roots(state.m, spec)
            assert len(roots) == 1
            assert roots[0] == pytest.approx(state.kappa, rel=1e-10)
        assert dr.spectrum(spec) == ref


@pytest.mark.parametrize("alpha,beta,R,d", [(1.0, 1.0, 1.0, 0.5), (2.0, 0.7, 1.3, 2.0), (0.6, 2.5, 0.8, 0.1)])
def test_eta_and_determinant_share_roots(alpha, beta, R, d):
    spec = DoubleRingSpec(alpha, beta, R, d)
    a = dr.spectrum(spec, "eta")
    b = dr.spectrum(spec, "det")
    assert [s.m for s in a] == [s.m for s in b]
    for x, y in zip(a, b):
        assert x.kappa == pytest.approx(y.kappa, rel=1e-9)


def test_eta_vanishes_at_det_roots():
    spec = DoubleRingSpec(1.3, 2.1, 1.2, 1.5)
    for m in range(3):
        for k in dr.mode_roots(m, spec, "det"):
            s = dr.sample(m, spec, k)
            assert abs(s.eta) < 1e-12 * max(1.0, abs(s.xi_product))


def test_nu_positive_and_flushed():
    spec = DoubleRingSpec(1.0, 1.0, 1.0, 2.0)
    assert dr.nu(0, spec, 0.5) > 0.0
    far = DoubleRingSpec(1.0, 1.0, 1.0, 2000.0)
    assert dr.nu(0, far, 0.5) == 0.0
    assert dr.eta(0, far, 0.5) == pytest.approx(-dr.xi_outer(0, far, 0.5) * dr.xi_inner(0, far, 0.5), rel=1e-15)


def test_nu_at_extreme_orders_is_finite():
    # I_m(kappa R) underflows and K_m(kappa R_d) overflows in double precision
    spec = DoubleRingSpec(1.0, 1.0, 50.0, 1e-3)
    value = dr.nu(40, spec, 1e-8)
    assert math.isfinite(value) and value > 0.0
    assert math.isfinite(dr.det_oracle(40, spec, 1e-8))


def test_sample_fields_consistent():
    spec = DoubleRingSpec(1.0, 2.0, 1.0, 0.7)
    s = dr.sample(1, spec, 0.4)
    assert s.eta == s.nu - s.xi_product
    assert s.xi_product == pytest.approx(dr.xi_outer(1, spec, 0.4) * dr.xi_inner(1, spec, 0.4), rel=1e-14)


def test_no_attraction_gives_empty_spectrum():
    assert dr.spectrum(DoubleRingSpec(-1.0, -0.5, 1.0, 1.0)) == []
    assert dr.spectrum(DoubleRingSpec(0.0, 0.0, 1.0, 1.0)) == []


def test_repulsive_inner_circle_still_binds_on_outer():
    spec = DoubleRingSpec(3.0, -1.0, 1.0, 2.0)
    states = dr.spectrum(spec)
    assert states and all(s.kappa > 0 for s in states)


def test_large_separation_root_count():
    # far apart: every mode carries the bound states of each circle alone
    alpha, beta, R, d = 2.0, 3.0, 1.0, 6.0
    spec = DoubleRingSpec(alpha, beta, R, d)
    for m in range(2):
        inner = single_spectrum(RingSpec(beta, R))
        outer = single_spectrum(RingSpec(alpha, R + d))
        expected = sum(1 for s in inner if s.m == m) + sum(1 for s in outer if s.m == m)
        assert len(dr.mode_roots(m, spec)) == expected


def test_kappa_grid_shape():
    spec = DoubleRingSpec(1.0, 1.0, 1.0, 1.0)
    grid = dr.kappa_grid(spec)
    assert grid[0] == pytest.approx(1e-6)
    assert grid[-1] == pytest.approx(spec.kappa_cap)
    assert np.all(np.diff(grid) > 0)


def test_spectrum_sorted_with_multiplicities():
    states = dr.spectrum(DoubleRingSpec(2.0, 2.0, 1.0, 0.5))
    energies = [s.energy for s in states]
    assert energies == sorted(energies)
    assert {s.multiplicity for s in states if s.m > 0} <= {2}


def test_no_tangency_warning_on_generic_instance():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        dr.spectrum(DoubleRingSpec(1.987757759832601, 2.7224772626178537, 1.6635285353677902, 1.1647755904534298))
