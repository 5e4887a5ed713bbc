r"""
The Bessel kernel
-----------------
Every spectral function in the package is assembled from modified Bessel
functions :math:`I_m` and :math:`K_m` of integer order. Their plain values
overflow and underflow quickly, so the kernel works with the exponentially
scaled pair :math:`e^{-z}I_m(z)` and :math:`e^{z}K_m(z)`.
"""
import math

from ringspectra import oracle, specfun

#%%
# A value comes back with both representations. At ``z = 800`` the plain
# :math:`I_0` is beyond double range, while the scaled one is an ordinary
# number close to :math:`1/\sqrt{2\pi z}`.
v = specfun.bessel_i(0, 800.0)
print(v)
print("1/sqrt(2 pi z) =", 1.0 / math.sqrt(2 * math.pi * 800.0))

#%%
# Compare against the arbitrary-precision reference on a few points.
for m, z in [(0, 1.0), (5, 0.01), (20, 50.0), (3, 650.0)]:
    ref_i, ref_k = oracle.scaled_ik(m, z)
    got_i = specfun.bessel_i(m, z).scaled
    got_k = specfun.bessel_k(m, z).scaled
    print(f"m={m:2d} z={z:7.2f}  rel.err I={abs(got_i / ref_i - 1):.1e}  K={abs(got_k / ref_k - 1):.1e}")

#%%
# The Wronskian :math:`z(I_m'K_m - K_m'I_m) = 1` is a free consistency
# check. ``scaled_ik`` returns values and derivatives in one pass.
for m, z in [(0, 0.001), (7, 3.0), (20, 99.0)]:
    s = specfun.scaled_ik(m, z)
    print(f"m={m:2d} z={z:6.3f}  residual={abs(z * (s.di * s.k - s.dk * s.i) - 1):.1e}")

#%%
# Products :math:`I_mK_m` carry no exponential factor at all. For large
# orders and tiny arguments the factors themselves leave double range, and
# the kernel switches to a logarithmic form; the product still tends to
# :math:`1/(2m)`.
for m, z in [(1, 1e-6), (32, 1e-9), (80, 1e-3)]:
    print(f"m={m:2d} z={z:.0e}  I_m K_m = {specfun.product_ik(m, z):.15f}   1/(2m) = {1 / (2 * m):.15f}")
