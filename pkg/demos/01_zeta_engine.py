#=========================================================================
# 01_zeta_engine.py
#=========================================================================
# Evaluate zeta on the critical line two independent ways and check that
# they agree: slow Euler-Maclaurin summation versus the fast Riemann-Siegel
# formula, plus the Hardy Z function whose realness couples zeta to theta.

import numpy as np

from sine_moments import hardy_z, theta, zeta_critical, zeta_em
from sine_moments.special_functions import theta_asymptotic

#-------------------------------------------------------------------------
# Two routes to zeta(1/2 + it)
#-------------------------------------------------------------------------

for t in (50.0, 500.0, 5000.0):
    rs = zeta_critical(t)
    em = zeta_em(complex(0.5, t))
    print(f"t = {t:7.1f}  RS {rs:.12f}")
    print(f"            EM {em:.12f}   |diff| = {abs(rs - em):.2e}")

#-------------------------------------------------------------------------
# The phase theta(t) and its asymptotic series
#-------------------------------------------------------------------------

for t in (100.0, 1000.0):
    print(f"theta({t}) = {theta(t):.12f}   "
          f"asymptotic err = {abs(theta(t) - theta_asymptotic(t)):.2e}")

#-------------------------------------------------------------------------
# Hardy's Z is real and vanishes exactly at the nontrivial zeros;
# scan a short window and bracket the sign changes
#-------------------------------------------------------------------------

ts = np.linspace(14.0, 26.0, 600)
zs = np.array([hardy_z(float(t)) for t in ts])
crossings = ts[:-1][np.sign(zs[:-1]) != np.sign(zs[1:])]
print("zeros of Z(t) in [14, 26] near:", np.round(crossings, 3))
print("(the first three nontrivial zeros lie at 14.135, 21.022, 25.011)")
