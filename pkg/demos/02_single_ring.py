r"""
One circle
----------
A single attractive delta circle of radius ``R`` and strength ``gamma``
binds one state per angular mode ``m`` with ``2|m| < gamma R``. Modes with
``m != 0`` come in pairs, so the spectrum has ``2M + 1`` eigenvalues.
"""
from ringspectra.single_ring import RingSpec, eigenfunction, max_mode, spectrum

#%%
# Count and list the bound states for a moderately strong circle.
ring = RingSpec(gamma=7.0, R=1.0)
print("M =", max_mode(ring))
for state in spectrum(ring):
    print(f"m={state.m}  kappa={state.kappa:.12f}  E={state.energy:.12f}  mult={state.multiplicity}")

#%%
# A new mode appears each time ``gamma R`` crosses an even integer. Right
# at the crossing the mode is not yet bound.
for gamma in (3.99, 4.0, 4.01):
    r = RingSpec(gamma, 1.0)
    print(gamma, "->", sum(s.multiplicity for s in spectrum(r)), "eigenvalues")

#%%
# Rescaling ``(gamma, R) -> (lambda gamma, R / lambda)`` multiplies every
# ``kappa`` by ``lambda``.
lam = 5.0
a = spectrum(RingSpec(7.0, 1.0))
b = spectrum(RingSpec(7.0 * lam, 1.0 / lam))
print([round(y.kappa / x.kappa, 12) for x, y in zip(a, b)])

#%%
# The radial eigenfunction is ``I_m`` inside and a multiple of ``K_m``
# outside; its slope jumps by ``-gamma`` times its value on the circle.
state = spectrum(ring)[0]
ef = eigenfunction(state, ring)
print("jump residual:", ef.jump_residual(ring.gamma))
print("norm^2 (int rho^2 r dr):", ef.norm_squared)

#%%
# For strong coupling the eigenvalues approach
# ``-gamma**2/4 + (m**2 - 1/4)/R**2``, and the remainder falls by about 4
# every time ``gamma`` doubles.
from ringspectra.asymptotics import large_coupling_single
from ringspectra.single_ring import solve_mode

prev = None
for gamma in (20.0, 40.0, 80.0, 160.0):
    k = solve_mode(1, RingSpec(gamma, 1.0)).kappa
    res = abs(-k * k - large_coupling_single(1, gamma, 1.0))
    print(f"gamma={gamma:5.0f}  residual={res:.3e}" + (f"  shrink={prev / res:.3f}" if prev else ""))
    prev = res
