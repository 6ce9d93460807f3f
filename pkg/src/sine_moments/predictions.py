"""Closed-form right-hand sides for the shifted-moment asymptotics.

S(x) = sin x / x and T(x) = (1 - S(x)^2) / x^2 give the one- and two-shift
predictions; the general-M prediction is a sine-kernel determinant divided by
Vandermonde factors, equal (as an algebraic identity) to a permutation sum
over the binom(2M, M) "riffle" permutations S'_{2M}.  Coalescing shifts are
handled by a symmetric-perturbation Richardson limit shared with the CUE
exact formulas.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import CoalescenceError

_TWO_PI = 2.0 * math.pi

COALESCENCE_TOL = 1e-4   # below this gap the determinant ratio goes confluent
DISTINCT_TOL = 1e-8      # below this gap pole-bearing sums refuse to evaluate


@dataclass
class ShiftConfig:
    """M pairs of dimensionless shifts (mu_j, nu_j)."""

    M: int
    mu: np.ndarray
    nu: np.ndarray

    def __post_init__(self):
        if not 1 <= self.M <= 6:
            raise ValueError("M must be in [1, 6]")
        self.mu = np.asarray(self.mu, dtype=float)
        self.nu = np.asarray(self.nu, dtype=float)
        if self.mu.shape != (self.M,) or self.nu.shape != (self.M,):
            raise ValueError("mu and nu must each have length M")

    def conjugated(self) -> "ShiftConfig":
        """Negate all shifts; maps between the two phase conventions."""
        return ShiftConfig(self.M, -self.mu, -self.nu)


@dataclass
class PredictionResult:
    value: complex
    method: str  # closed_form | det_ratio | perm_sum | confluent_limit
    coalescence_detected: bool = False


def sinc_s(x: float) -> float:
    """sin(x)/x extended by 1 at x = 0 (Taylor branch below 1e-4)."""
    if abs(x) < 1e-4:
        x2 = x * x
        return 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0)
    return math.sin(x) / x


def kernel_t(x: float) -> float:
    """(1 - (sin x / x)^2) / x^2 extended by 1/3 at x = 0."""
    if abs(x) < 1e-3:
        x2 = x * x
        return 1.0 / 3.0 - 2.0 * x2 / 45.0 + x2 * x2 / 315.0
    s = math.sin(x) / x
    return (1.0 - s * s) / (x * x)


def theorem1_rhs(mu: float, nu: float) -> complex:
    """Limit of the normalized shifted second moment: e^{-i pi (mu-nu)} S(pi (mu-nu))."""
    d = mu - nu
    return cmath.exp(-1j * math.pi * d) * sinc_s(math.pi * d)


def theorem2_rhs(mu: float, nu: float) -> float:
    """Limit of the normalized shifted fourth moment: (3 / 2 pi^2) T(pi (mu-nu))."""
    return 1.5 / math.pi ** 2 * kernel_t(math.pi * (mu - nu))


def _vandermonde(x: np.ndarray) -> float:
    v = 1.0
    for j in range(len(x)):
        for k in range(j + 1, len(x)):
            v *= x[k] - x[j]
    return v


def _det_ratio_raw(mu: np.ndarray, nu: np.ndarray) -> float:
    kernel = np.empty((len(mu), len(nu)))
    for j, m in enumerate(mu):
        for k, n in enumerate(nu):
            kernel[j, k] = sinc_s(math.pi * (m - n))
    return float(np.linalg.det(kernel)) / (
        _vandermonde(_TWO_PI * mu) * _vandermonde(_TWO_PI * nu))


def _min_gap(x: np.ndarray) -> float:
    if len(x) < 2:
        return math.inf
    s = np.sort(x)
    return float(np.min(np.diff(s)))


def confluent_richardson(f, mu: np.ndarray, nu: np.ndarray,
                         hs=(1e-2, 5e-3, 2.5e-3)) -> complex:
    """Continuous extension of f(mu, nu) at coalesced shifts.

    Each parameter is moved by its own integer multiple of h (so all gaps open
    proportionally to h), the +h and -h evaluations are averaged to kill odd
    orders, and two Richardson stages in h^2 remove the h^2 and h^4 terms,
    leaving an O(h^6) ~ 1e-12 residual at the default step sizes.
    """
    m = len(mu)
    dm = np.arange(1, m + 1, dtype=float)
    dn = np.arange(m + 1, 2 * m + 1, dtype=float)

    def sym(h):
        return 0.5 * (f(mu + dm * h, nu + dn * h) + f(mu - dm * h, nu - dn * h))

    v0, v1, v2 = (sym(h) for h in hs)
    r01 = (4.0 * v1 - v0) / 3.0
    r12 = (4.0 * v2 - v1) / 3.0
    return (16.0 * r12 - r01) / 15.0


def sine_kernel_ratio(cfg: ShiftConfig) -> PredictionResult:
    """det(S(pi (mu_j - nu_k))) / (Delta(2 pi mu) Delta(2 pi nu)).

    The ratio extends continuously to coincident shifts; near-coalescence
    within mu or within nu is detected and resolved by confluent_richardson.
    """
    if min(_min_gap(cfg.mu), _min_gap(cfg.nu)) < COALESCENCE_TOL:
        value = confluent_richardson(_det_ratio_raw, cfg.mu, cfg.nu)
        return PredictionResult(complex(value), "confluent_limit", True)
    return PredictionResult(complex(_det_ratio_raw(cfg.mu, cfg.nu)), "det_ratio", False)


def _riffles(two_m: int):
    """S'_{2M}: permutations ascending on positions 1..M and M+1..2M, as
    (first half, second half) index tuples in lexicographic order."""
    universe = range(two_m)
    for first in combinations(universe, two_m // 2):
        second = tuple(i for i in universe if i not in first)
        yield first, second


def perm_sum(cfg: ShiftConfig) -> PredictionResult:
    """The permutation-sum form of the sine-kernel ratio:

    sum over S'_{2M} of exp(1/2 sum_j (xi_{s(j)} - xi_{s(M+j)}))
    / prod_{j,k} (xi_{s(j)} - xi_{s(M+k)}),   xi = 2 pi i (mu_1..mu_M, nu_1..nu_M).

    Individual terms have poles, so all 2M shifts must be pairwise distinct
    beyond 1e-8 (CoalescenceError otherwise).
    """
    xi = _TWO_PI * 1j * np.concatenate([cfg.mu, cfg.nu])
    all_shifts = np.concatenate([cfg.mu, cfg.nu])
    for a, b in combinations(all_shifts, 2):
        if abs(a - b) < DISTINCT_TOL:
            raise CoalescenceError(
                f"shifts {a} and {b} closer than {DISTINCT_TOL}")
    total = 0.0 + 0.0j
    for first, second in _riffles(2 * cfg.M):
        expo = sum(xi[j] for j in first) - sum(xi[k] for k in second)
        denom = 1.0 + 0.0j
        for j in first:
            for k in second:
                denom *= xi[j] - xi[k]
        total += cmath.exp(0.5 * expo) / denom
    return PredictionResult(total, "perm_sum", False)


def conjecture_rhs(cfg: ShiftConfig, aM: float) -> PredictionResult:
    """a_M e^{-pi i sum(mu_j - nu_j)} times the sine-kernel ratio: the
    conjectured limit of the normalized 2M-fold shifted moment."""
    if aM <= 0.0:
        raise ValueError("aM must be positive")
    ratio = sine_kernel_ratio(cfg)
    phase = cmath.exp(-1j * math.pi * float(np.sum(cfg.mu - cfg.nu)))
    return PredictionResult(aM * phase * ratio.value, ratio.method,
                            ratio.coalescence_detected)


def verify_cue6(cfg: ShiftConfig) -> float:
    """Relative residual between the determinant-ratio and permutation-sum
    forms; an algebraic identity, so the residual is rounding-level."""
    ratio = sine_kernel_ratio(cfg).value
    perm = perm_sum(cfg).value
    return abs(perm - ratio) / abs(ratio)
