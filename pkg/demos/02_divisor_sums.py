#=========================================================================
# 02_divisor_sums.py
#=========================================================================
# The fourth-moment diagonal is controlled by sums of d(n)^2.  Sieve the
# divisor function, watch sum d(n)^2 / n approach its log^4 T / (4 pi^2)
# asymptote from above, and evaluate the Euler-product factor a_M.

import math

from sine_moments import a_m, divisor_sieve, sum_d2, sum_d2_over_n

#-------------------------------------------------------------------------
# Sieve to 10^7 and track the asymptotics decade by decade
#-------------------------------------------------------------------------

table = divisor_sieve(10 ** 7)

print(f"{'T':>10}  {'sum d^2/(T log^3 T)':>20}  {'sum d^2/n normalized':>21}")
for k in range(4, 8):
    T = 10 ** k
    log_t = math.log(T)
    ratio1 = sum_d2(T, table) / (T * log_t ** 3)
    ratio2 = sum_d2_over_n(T, table) / (log_t ** 4 / (4.0 * math.pi ** 2))
    print(f"{T:>10}  {ratio1:>20.6f}  {ratio2:>21.6f}")
print(f"{'limits':>10}  {1.0 / math.pi ** 2:>20.6f}  {1.0:>21.6f}")

#-------------------------------------------------------------------------
# The arithmetic factor a_M: a_1 = 1 and a_2 = 6/pi^2 exactly
#-------------------------------------------------------------------------

for M in (1, 2, 3, 4):
    res = a_m(M)
    print(f"a_{M} = {res.value:.15f}   (tail bound {res.tail_bound:.1e})")
print(f"6/pi^2 = {6.0 / math.pi ** 2:.15f}")
