#=========================================================================
# 06_moment_experiment.py
#=========================================================================
# The full experiment at desk scale: integrate |zeta(1/2 + it)|^2 with a
# location-dependent shift 2 pi delta / log t between the two arguments,
# normalize, and compare the ratio against the sinc prediction.  At
# T = 10^4 the agreement is qualitative but already shows the sinc decay.

import math

from sine_moments import QuadraturePolicy, ratio_curve, shifted_moment
from sine_moments.predictions import ShiftConfig, sinc_s

T = 1.0e4
policy = QuadraturePolicy(nodes_per_gap=6.0)

#-------------------------------------------------------------------------
# The second-moment ratio curve versus delta
#-------------------------------------------------------------------------

deltas = [0.0, 0.5, 1.0, 2.0]
rows = ratio_curve(1, deltas, T, policy=policy)
print(f"{'delta':>6}  {'measured ratio':>14}  {'sinc prediction':>15}")
for row in rows:
    pred = abs(sinc_s(math.pi * row["delta"]))
    print(f"{row['delta']:>6.2f}  {abs(row['empirical']):>14.4f}  "
          f"{pred:>15.4f}")

#-------------------------------------------------------------------------
# A single shifted moment with its quadrature-error estimate
#-------------------------------------------------------------------------

cfg = ShiftConfig(1, [0.25], [-0.25])
est = shifted_moment(cfg, 10.0, T, window="dyadic", policy=policy, aM=1.0)
print(f"\ndyadic window [T, 2T], T = {T:.0e}")
print(f"normalized moment   = {est.normalized:.6f}")
print(f"quadrature estimate = {est.est_quadrature_error:.2e}")
print(f"nodes used          = {est.nodes_used}")
print(f"prediction          = {est.prediction:.6f}")
print(f"|deviation|         = {abs(est.normalized - est.prediction):.4f}")
