"""Riemann zeta evaluation: Euler-Maclaurin oracle, fast Riemann-Siegel on the
critical line, the Hardy Z function, the truncated divisor-sum approximation
S(lambda, t) to |zeta|^2 with a location-dependent shift, and zeta(1 + s) for
small s.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from ._rs_coeffs import RS_CHEB_COEFFS
from .errors import PoleError, SieveTooSmall
from .special_functions import theta, theta_array

_TWO_PI = 2.0 * math.pi

# B_2 .. B_20 divided by (2k)!
_B2K_OVER_FACT = [
    (1.0 / 6.0) / math.factorial(2),
    (-1.0 / 30.0) / math.factorial(4),
    (1.0 / 42.0) / math.factorial(6),
    (-1.0 / 30.0) / math.factorial(8),
    (5.0 / 66.0) / math.factorial(10),
    (-691.0 / 2730.0) / math.factorial(12),
    (7.0 / 6.0) / math.factorial(14),
    (-3617.0 / 510.0) / math.factorial(16),
    (43867.0 / 798.0) / math.factorial(18),
    (-174611.0 / 330.0) / math.factorial(20),
]

# Stieltjes constants gamma_0 .. gamma_3 for the Laurent expansion of zeta at 1.
_STIELTJES = [
    0.57721566490153286061,
    -0.07281584548367672486,
    -0.00969036319287091751,
    0.00205383442030334587,
]
EULER_GAMMA = _STIELTJES[0]


@dataclass
class ZetaEvalConfig:
    """Tuning knobs for the zeta engines.

    rs_correction_terms: number of Riemann-Siegel remainder terms beyond the
    main sum minus one (0 keeps only C0, 4 keeps C0..C4).
    em_cutoff: height below which the Riemann-Siegel path delegates to
    Euler-Maclaurin.
    em_terms: minimum number of direct terms in the Euler-Maclaurin sum.
    """

    rs_correction_terms: int = 4
    em_cutoff: float = 30.0
    em_terms: int = 50

    def __post_init__(self):
        if not 0 <= self.rs_correction_terms <= 4:
            raise ValueError("rs_correction_terms must be in [0, 4]")
        if self.em_cutoff < 2.0:
            raise ValueError("em_cutoff must be >= 2")


DEFAULT_CONFIG = ZetaEvalConfig()


def zeta_em(s: complex, cfg: ZetaEvalConfig = DEFAULT_CONFIG) -> complex:
    """zeta(s) by Euler-Maclaurin summation.

    Slow but accurate reference path: absolute error <= 1e-10 for
    |Im s| <= 1e4.  Raises PoleError within 1e-12 of s = 1.
    """
    s = complex(s)
    if abs(s - 1.0) < 1e-12:
        raise PoleError("zeta has its pole at s = 1")
    n_direct = max(cfg.em_terms, int(2.0 * abs(s)) + 1)
    n = np.arange(1, n_direct)
    total = np.sum(np.exp(-s * np.log(n))) if n_direct > 1 else 0.0
    big_n = float(n_direct)
    log_n = math.log(big_n)
    total += cmath.exp((1.0 - s) * log_n) / (s - 1.0)
    total += 0.5 * cmath.exp(-s * log_n)
    # Bernoulli tail: sum_k B_2k/(2k)! * s(s+1)...(s+2k-2) * N^(-s-2k+1)
    poch = s
    for k, b in enumerate(_B2K_OVER_FACT, start=1):
        total += b * poch * cmath.exp(-(s + 2.0 * k - 1.0) * log_n)
        poch *= (s + 2.0 * k - 1.0) * (s + 2.0 * k)
    return complex(total)


def _rs_zeta_array(ts: np.ndarray, n_corr: int) -> np.ndarray:
    """Riemann-Siegel zeta(1/2 + i t) for an array of heights t > 2 pi."""
    ts = np.asarray(ts, dtype=float)
    a = np.sqrt(ts / _TWO_PI)
    trunc = a.astype(np.int64)
    p = a - trunc
    th = theta_array(ts)
    x = ts / _TWO_PI
    corr = np.zeros(ts.shape)
    for j in range(n_corr + 1):
        corr += np.polynomial.chebyshev.chebval(2.0 * p - 1.0, RS_CHEB_COEFFS[j]) * x ** (-0.5 * j)
    corr *= np.where(trunc % 2 == 1, 1.0, -1.0) * x ** -0.25
    z = np.empty(ts.shape)
    for nv in np.unique(trunc):
        idx = np.nonzero(trunc == nv)[0]
        n = np.arange(1, nv + 1)
        phases = th[idx, None] - ts[idx, None] * np.log(n)[None, :]
        z[idx] = 2.0 * (np.cos(phases) / np.sqrt(n)).sum(axis=1)
    z += corr
    return z * np.exp(-1j * th)


def zeta_critical(t: float, cfg: ZetaEvalConfig = DEFAULT_CONFIG) -> complex:
    """zeta(1/2 + i t) for t >= 2: Riemann-Siegel above cfg.em_cutoff,
    Euler-Maclaurin below."""
    if t < 2.0:
        raise ValueError("zeta_critical requires t >= 2")
    if t < cfg.em_cutoff:
        return zeta_em(complex(0.5, t), cfg)
    return complex(_rs_zeta_array(np.array([t]), cfg.rs_correction_terms)[0])


def zeta_critical_array(ts: np.ndarray, cfg: ZetaEvalConfig = DEFAULT_CONFIG) -> np.ndarray:
    """Vectorized zeta(1/2 + i t); heights below cfg.em_cutoff fall back to
    the scalar Euler-Maclaurin path."""
    ts = np.asarray(ts, dtype=float)
    out = np.empty(ts.shape, dtype=complex)
    low = ts < cfg.em_cutoff
    if np.any(low):
        out[low] = [zeta_em(complex(0.5, t), cfg) for t in ts[low]]
    if np.any(~low):
        out[~low] = _rs_zeta_array(ts[~low], cfg.rs_correction_terms)
    return out


def hardy_z(t: float, cfg: ZetaEvalConfig = DEFAULT_CONFIG) -> float:
    """Hardy's Z(t) = exp(i theta(t)) zeta(1/2 + it); real by the functional
    equation, the residual imaginary part is discarded."""
    if t < 0.0:
        raise ValueError("hardy_z requires t >= 0")
    if t < max(2.0, cfg.em_cutoff):
        val = cmath.exp(1j * theta(t)) * zeta_em(complex(0.5, t), cfg)
        return val.real
    # the Riemann-Siegel path computes Z(t) directly (zero imaginary residue)
    z = _rs_zeta_array(np.array([t]), cfg.rs_correction_terms)[0]
    return (cmath.exp(1j * theta(t)) * z).real


def hardy_z_imag_residue(t: float, cfg: ZetaEvalConfig = DEFAULT_CONFIG) -> float:
    """|Im(exp(i theta) zeta(1/2+it))| via the Euler-Maclaurin path; a joint
    consistency check of theta and zeta."""
    return abs((cmath.exp(1j * theta(t)) * zeta_em(complex(0.5, t), cfg)).imag)


def approx_s(lam: float, t: float, table) -> complex:
    """Truncated divisor sum S(lambda, t) approximating the shifted |zeta|^2.

    S = exp(i pi/4) (2 pi e / t)^(it) (2 pi / t)^(2 pi i lambda / log t)
        * sum_{n <= t/2pi} d(n) n^(-1/2 + it + 2 pi i lambda / log t),
    and 2 Re S(lambda, t) tracks |zeta(1/2 + it + 2 pi i lambda/log t)|^2 up
    to an O(log t) residual.  `table` is an arithmetic.DivisorTable covering
    floor(t / 2 pi).
    """
    if t <= _TWO_PI:
        raise ValueError("approx_s requires t > 2 pi")
    n_max = int(t / _TWO_PI)
    if table.limit < n_max:
        raise SieveTooSmall(f"divisor table limit {table.limit} < {n_max}")
    log_t = math.log(t)
    shift = _TWO_PI * lam / log_t
    n = np.arange(1, n_max + 1)
    log_n = np.log(n)
    d = table.d[1:n_max + 1].astype(float)
    terms = d * np.exp(-0.5 * log_n) * np.exp(1j * (t + shift) * log_n)
    prefactor = (cmath.exp(0.25j * math.pi)
                 * cmath.exp(1j * t * (math.log(_TWO_PI) + 1.0 - log_t))
                 * cmath.exp(1j * shift * (math.log(_TWO_PI) - log_t)))
    return prefactor * complex(terms.sum())


def zeta_one_plus(s: complex, cfg: ZetaEvalConfig = DEFAULT_CONFIG) -> complex:
    """zeta(1 + s) near the pole, for 0 < |s| <= 16.

    Euler-Maclaurin for |s| >= 1e-3; below that, the Laurent expansion
    1/s + gamma_0 - gamma_1 s + gamma_2 s^2/2 - gamma_3 s^3/6.
    """
    s = complex(s)
    r = abs(s)
    if r == 0.0:
        raise PoleError("zeta(1 + s) has its pole at s = 0")
    if r > 16.0:
        raise ValueError("zeta_one_plus is meant for the neighborhood of the pole")
    if r >= 1e-3:
        return zeta_em(1.0 + s, cfg)
    acc = 1.0 / s
    sign_pow = 1.0
    fact = 1.0
    for k, g in enumerate(_STIELTJES):
        if k:
            sign_pow *= -s
            fact *= k
        acc += g * sign_pow / fact
    return acc
