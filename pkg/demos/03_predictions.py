#=========================================================================
# 03_predictions.py
#=========================================================================
# The predicted limits of the normalized shifted moments: the sinc kernel
# S(x) = sin x / x for the second moment, T(x) = (1 - S^2)/x^2 for the
# fourth, and for general M a sine-kernel determinant over Vandermonde
# factors -- algebraically identical to a binom(2M, M)-term permutation sum.

import math

import numpy as np

from sine_moments import (ShiftConfig, conjecture_rhs, sine_kernel_ratio,
                          theorem1_rhs, theorem2_rhs, verify_cue6)

#-------------------------------------------------------------------------
# Second and fourth moment closed forms along a shift separation delta
#-------------------------------------------------------------------------

print(f"{'delta':>6}  {'|theorem 1 rhs|':>15}  {'theorem 2 rhs':>14}")
for d in (0.0, 0.25, 0.5, 1.0, 2.0):
    print(f"{d:>6.2f}  {abs(theorem1_rhs(d, 0.0)):>15.6f}  "
          f"{theorem2_rhs(d, 0.0):>14.6f}")

#-------------------------------------------------------------------------
# Determinant ratio == permutation sum (the identity behind the M-fold
# prediction); residuals are at rounding level
#-------------------------------------------------------------------------

rng = np.random.default_rng(1)
for M in (1, 2, 3):
    mu = np.sort(rng.uniform(-1, 1, M))[::-1]
    nu = np.sort(rng.uniform(-1, 1, M))
    cfg = ShiftConfig(M, mu, nu)
    print(f"M = {M}: det ratio {sine_kernel_ratio(cfg).value:+.10f}   "
          f"identity residual {verify_cue6(cfg):.2e}")

#-------------------------------------------------------------------------
# Coalescing shifts: the ratio extends continuously, evaluated by a
# symmetric-perturbation Richardson limit when gaps close
#-------------------------------------------------------------------------

a = 0.2
for eps in (1e-1, 1e-2, 1e-3, 0.0):
    cfg = ShiftConfig(2, [a, a + eps], [a, a + eps], )
    res = conjecture_rhs(cfg, 6.0 / math.pi ** 2)
    tag = " (confluent)" if res.coalescence_detected else ""
    print(f"eps = {eps:7.0e}: conjecture rhs = {res.value.real:.10f}{tag}")
print(f"classical fourth-moment constant 1/(2 pi^2) = {1/(2*math.pi**2):.10f}")
