"""Numerical laboratory for shifted moments of the Riemann zeta function on
the critical line and their sine-kernel / CUE predictions.

Layers:

- special_functions, zeta_eval: log-gamma, the chi factor, theta, and fast
  Riemann-Siegel evaluation of zeta(1/2 + it) with an Euler-Maclaurin oracle.
- arithmetic: divisor sieve, divisor-sum asymptotics, and the Euler-product
  factor a_M.
- predictions: closed-form limits (sinc kernel, determinant ratio,
  permutation sum) with confluent handling of coalescing shifts.
- cue: Haar-unitary Monte Carlo and the exact finite-N formulas.
- cfkrs: leading-order moment-density evaluator bridging the zeta and
  random-matrix sides.
- moment_integrator: oscillation-aware quadrature of the actual moment
  integrals.
- cli: deterministic CSV/JSON command-line front end (`sine-moments`).
"""

__version__ = "1.0.0"

from .errors import (BudgetExceeded, CoalescenceError, ConvergenceError,
                     FormatError, MemoryBudgetError, PoleError,
                     SieveTooSmall, SineMomentsError, TooLarge,
                     TruncationError)
from .special_functions import chi, ln_gamma, theta
from .zeta_eval import (ZetaEvalConfig, approx_s, hardy_z, zeta_critical,
                        zeta_critical_array, zeta_em, zeta_one_plus)
from .arithmetic import (DivisorTable, EulerProductResult, a_m, divisor_sieve,
                         offdiag_sum, sieve_cache_load, sieve_cache_save,
                         sum_d2, sum_d2_over_n)
from .predictions import (PredictionResult, ShiftConfig, conjecture_rhs,
                          kernel_t, perm_sum, sinc_s, sine_kernel_ratio,
                          theorem1_rhs, theorem2_rhs, verify_cue6)
from .cue import (CueEstimate, UnitaryMatrix, charpoly_product, cue_exact_det,
                  cue_exact_perm, cue_mc, haar_sample, scaling_check)
from .cfkrs import WmResult, wm_leading, wm_pole
from .moment_integrator import (MomentEstimate, QuadraturePolicy, moment_scan,
                                ratio_curve, shifted_moment)

__all__ = [name for name in dir() if not name.startswith("_")]
