"""Leading-order evaluator for the conjectured 2M-fold shifted-moment density
W_M(t), in two modes that bracket the reduction to the sine-kernel prediction.

wm_leading keeps genuine zeta(1 + x) factors and the exponent
(1/2) log(t/2pi) * xi / log t; wm_pole replaces zeta(1 + x) by its pole 1/x
and simplifies the exponent to xi/2.  Their ratio tends to 1 as t grows, and
wm_pole / (log t)^(M^2) equals the conjectured limit exactly.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import CoalescenceError
from .predictions import ShiftConfig, confluent_richardson
from .zeta_eval import zeta_one_plus

_TWO_PI = 2.0 * math.pi
_POLE_TOL = 1e-8
_LEADING_TOL = 1e-6


@dataclass
class WmResult:
    t: float
    cfg: ShiftConfig
    value: complex
    mode: str  # zeta_factors | pole_approx
    aM_used: float


def _riffles(two_m: int):
    for first in combinations(range(two_m), two_m // 2):
        yield first, tuple(i for i in range(two_m) if i not in first)


def _wm_leading_raw(t: float, mu: np.ndarray, nu: np.ndarray, aM: float) -> complex:
    log_t = math.log(t)
    alpha = 0.5 * math.log(t / _TWO_PI) / log_t
    xi = _TWO_PI * 1j * np.concatenate([mu, nu])
    m = len(mu)
    pref = cmath.exp(alpha * (np.sum(xi[m:]) - np.sum(xi[:m])))
    total = 0.0 + 0.0j
    for first, second in _riffles(2 * m):
        expo = sum(xi[j] for j in first) - sum(xi[k] for k in second)
        term = cmath.exp(alpha * expo)
        for j in first:
            for k in second:
                term *= zeta_one_plus((xi[j] - xi[k]) / log_t)
        total += term
    return aM * pref * total


def wm_leading(t: float, cfg: ShiftConfig, aM: float) -> WmResult:
    """W_M with zeta(1 + (xi_s(j) - xi_s(M+k)) / log t) factors and the
    (1/2) log(t/2pi) exponent convention; near-coincident shifts fall back to
    the shared Richardson perturbation limit (the sum extends continuously)."""
    if t < 10.0:
        raise ValueError("wm_leading requires t >= 10")
    shifts = np.concatenate([cfg.mu, cfg.nu])
    min_gap = min((abs(a - b) for a, b in combinations(shifts, 2)), default=math.inf)
    if min_gap < _LEADING_TOL:
        value = confluent_richardson(lambda m, n: _wm_leading_raw(t, m, n, aM),
                                     cfg.mu, cfg.nu)
    else:
        value = _wm_leading_raw(t, cfg.mu, cfg.nu, aM)
    return WmResult(t=t, cfg=cfg, value=complex(value), mode="zeta_factors",
                    aM_used=aM)


def _wm_pole_raw(t: float, mu: np.ndarray, nu: np.ndarray, aM: float) -> complex:
    xi = _TWO_PI * 1j * np.concatenate([mu, nu])
    m = len(mu)
    pref = cmath.exp(-0.5 * (np.sum(xi[:m]) - np.sum(xi[m:])))
    total = 0.0 + 0.0j
    for first, second in _riffles(2 * m):
        expo = sum(xi[j] for j in first) - sum(xi[k] for k in second)
        denom = 1.0 + 0.0j
        for j in first:
            for k in second:
                denom *= xi[j] - xi[k]
        total += cmath.exp(0.5 * expo) / denom
    return aM * math.log(t) ** (m * m) * pref * total


def wm_pole(t: float, cfg: ShiftConfig, aM: float,
            confluent: bool = False) -> WmResult:
    """The pole approximation: zeta(1 + x) -> 1/x and exponent xi/2, giving

    aM (log t)^(M^2) e^{-(1/2) sum(xi_j - xi_{M+j})}
        * sum over S'_{2M} of e^{(1/2) sum(xi_s(j) - xi_s(M+j))}
          / prod(xi_s(j) - xi_s(M+k)).

    Algebraically equal to (log t)^(M^2) times the conjectured limit.
    Coincident shifts raise CoalescenceError unless confluent=True, which
    resolves them by the shared Richardson perturbation limit (the full sum
    extends continuously even though individual terms have poles)."""
    if t <= 1.0:
        raise ValueError("wm_pole requires t > 1")
    shifts = np.concatenate([cfg.mu, cfg.nu])
    min_gap = min((abs(a - b) for a, b in combinations(shifts, 2)), default=math.inf)
    if min_gap < _POLE_TOL:
        if not confluent:
            raise CoalescenceError(f"minimum shift gap {min_gap} below {_POLE_TOL}")
        value = confluent_richardson(lambda m, n: _wm_pole_raw(t, m, n, aM),
                                     cfg.mu, cfg.nu)
    else:
        value = _wm_pole_raw(t, cfg.mu, cfg.nu, aM)
    return WmResult(t=t, cfg=cfg, value=complex(value), mode="pole_approx",
                    aM_used=aM)
