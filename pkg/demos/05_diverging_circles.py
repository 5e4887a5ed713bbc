r"""
Diverging circles
-----------------
For a large gap the eigenvalues of each mode split into two families. The
inner family converges to the inner circle's own eigenvalue, with a shift
``w_m exp(-2 d kappa_{m,beta})``. The outer family sits just above the
threshold ``-alpha**2/4`` with a ``(m**2 - 1/4)/d**2`` correction.
"""
import math

import numpy as np

from ringspectra import asymptotics, harness

#%%
# Sweep the gap from 8 to 20 at alpha = beta = R = 1 and look at the fits.
grid = np.linspace(8.0, 20.0, 13)
fits = harness.sweep_diverge(1.0, 1.0, 1.0, grid)
for f in fits:
    print(f"m={f.m} {f.branch:5s} {f.quantity:14s} fitted={f.fitted:+.6f} reference={f.reference:+.6f}"
          f" rel.err={f.relative_error:.3f}")

#%%
# Here ``kappa_{0,beta} = 0.489`` sits next to ``alpha/2 = 0.5``, so the
# denominator of ``w_0`` is small and the shift only slowly approaches the
# leading-order model. The ratio climbs towards 1 as the gap grows.
inner = next(f for f in fits if f.quantity == "prefactor")
kb = asymptotics.coefficients(1.0, 1.0, 1.0)[0].kappa_m_beta
for d, _, e in inner.samples[::2]:
    print(f"d={d:5.1f}  shift / (w eps) = {(e + kb * kb) / (inner.reference * math.exp(-2 * d * kb)):.4f}")

#%%
# The outer family at alpha = 2, beta = 1. The measured coefficient follows
# ``(m**2 - 1/4) (d / (R + d))**2``: the outer circle has radius ``R + d``,
# which the ``1/d**2`` law only matches to ``O(R/d)``.
for d in (50.0, 200.0, 800.0):
    for f in harness.sweep_diverge(2.0, 1.0, 1.0, [d], modes=[0, 1]):
        if f.branch == "outer":
            print(f"d={d:5.0f} m={f.m}  d^2(E+1)={f.fitted:+.5f}  m^2-1/4={f.reference:+.2f}"
                  f"  with radius R+d: {f.reference * (d / (1 + d)) ** 2:+.5f}")
