#=========================================================================
# 05_cfkrs_reduction.py
#=========================================================================
# The moment-recipe main term W_M(t): its leading lattice term divided by
# (log t)^{M^2} approaches the arithmetic factor times the sine-kernel
# prediction as t grows, and the dominant-pole term matches it exactly.

import math

from sine_moments import (ShiftConfig, a_m, conjecture_rhs, wm_leading,
                          wm_pole)

M = 2
cfg = ShiftConfig(M, [0.6, -0.3], [0.45, -0.15])
aM = a_m(M).value
target = conjecture_rhs(cfg, aM).value

#-------------------------------------------------------------------------
# Leading term against the limiting prediction as t increases
#-------------------------------------------------------------------------

print(f"prediction (limit): {target:.8f}")
for t in (1e3, 1e6, 1e9, 1e12):
    res = wm_leading(t, cfg, aM)
    scaled = res.value / math.log(t) ** (M * M)
    print(f"t = {t:8.0e}  scaled leading = {scaled:.8f}  "
          f"|rel err| = {abs(scaled - target) / abs(target):.2e}")

#-------------------------------------------------------------------------
# The dominant-pole term reproduces the prediction identically
#-------------------------------------------------------------------------

res = wm_pole(1e6, cfg, aM)
scaled = res.value / math.log(1e6) ** (M * M)
print(f"\npole term / (log t)^4 = {scaled:.12f}")
print(f"prediction            = {target:.12f}")
print(f"|difference|          = {abs(scaled - target):.2e}")

#-------------------------------------------------------------------------
# M = 1 confluent sanity check: the classical log(t/2pi) + 2 gamma_0
#-------------------------------------------------------------------------

t = 1e4
cfg1 = ShiftConfig(1, [0.0], [0.0])
res = wm_leading(t, cfg1, a_m(1).value)
classical = math.log(t / (2.0 * math.pi)) + 2.0 * 0.5772156649015329
print(f"\nW_1({t:.0e}) confluent = {res.value.real:.10f}")
print(f"log(t/2pi) + 2 gamma  = {classical:.10f}")
