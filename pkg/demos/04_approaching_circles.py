r"""
Approaching circles
-------------------
As the gap ``d`` closes, each eigenvalue of the merged circle is reached
linearly, ``E_m(d) = E_m + t_m d + o(d)``, with a closed-form slope
``t_m``. The sign of ``t_0`` depends on the radius.
"""
import numpy as np

from ringspectra import asymptotics, harness

#%%
# Track every mode over a geometric grid of gaps and extrapolate the slope.
grid = np.geomspace(1e-5, 1e-2, 13)
for alpha, beta, R in [(1.0, 1.0, 1.0), (0.5, 2.0, 1.0), (1.0, 1.0, 0.1)]:
    for fit in harness.sweep_approach(alpha, beta, R, grid):
        print(f"({alpha}, {beta}, {R}) m={fit.m}  fitted={fit.fitted:+.10f}  t_m={fit.reference:+.10f}"
              f"  rel.err={fit.relative_error:.1e}")

#%%
# The remainder after the linear term is genuinely smaller than ``d``.
fit = harness.sweep_approach(1.0, 1.0, 1.0, grid)[0]
for (d, _, _), r in list(zip(fit.samples, fit.residuals))[::4]:
    print(f"d={d:.1e}  |r(d)|/d={abs(r) / d:.3e}")

#%%
# Two formulas for ``t_0``: from the secular function, and from the ground
# state of the merged circle. The sign is opposite to that of ``varsigma``.
for R in (0.1, 0.5, 1.0, 5.0, 50.0):
    t = asymptotics.tm(0, 1.0, 1.0, R)
    print(f"R={R:5.1f}  t0={t:+.12f}  via eigenfunction={asymptotics.t0_via_eigenfunction(1.0, 1.0, R):+.12f}"
          f"  varsigma={asymptotics.varsigma(1.0, 1.0, R):+.4f}")
