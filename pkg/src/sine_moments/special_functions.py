"""Complex log-gamma, the functional-equation factor chi, and the phase theta.

chi is the ratio in the functional equation zeta(s) = chi(s) * zeta(1 - s);
its phase on the critical line defines the continuous function theta(t) with
theta(0) = 0, which also enters the Riemann-Siegel evaluation of zeta.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .errors import PoleError

# Lanczos approximation, g = 607/128, 15 coefficients.  Relative error of
# exp(ln_gamma) is a few ulp for Re z >= 1/2; arguments left of that line are
# shifted up with the recurrence Gamma(z+1) = z Gamma(z).
_LANCZOS_G = 607.0 / 128.0
_LANCZOS_C = np.array([
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
])
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)

_POLE_TOL = 1e-14


def ln_gamma(z: complex) -> complex:
    """Principal branch of log Gamma(z).

    Raises PoleError if z is within 1e-14 of a non-positive integer.
    """
    z = complex(z)
    if z.imag == 0.0 and z.real <= 0.5:
        n = round(z.real)
        if n <= 0 and abs(z.real - n) < _POLE_TOL:
            raise PoleError(f"log-gamma pole at z = {n}")
    shift = 0.0 + 0.0j
    while z.real < 0.5:
        shift -= cmath.log(z)
        z += 1.0
    s = _LANCZOS_C[0]
    for k in range(1, 15):
        s += _LANCZOS_C[k] / (z - 1.0 + k)
    zg = z + _LANCZOS_G - 0.5
    return (z - 0.5) * cmath.log(zg) - zg + _HALF_LOG_2PI + cmath.log(s) + shift


def ln_gamma_array(z: np.ndarray) -> np.ndarray:
    """Vectorized ln_gamma for complex arrays with no pole checking."""
    z = np.asarray(z, dtype=complex).copy()
    shift = np.zeros_like(z)
    mask = z.real < 0.5
    while np.any(mask):
        shift[mask] -= np.log(z[mask])
        z[mask] += 1.0
        mask = z.real < 0.5
    s = np.full_like(z, _LANCZOS_C[0])
    for k in range(1, 15):
        s += _LANCZOS_C[k] / (z - 1.0 + k)
    zg = z + _LANCZOS_G - 0.5
    return (z - 0.5) * np.log(zg) - zg + _HALF_LOG_2PI + np.log(s) + shift


def _near_nonpositive_int(z: complex, tol: float = 1e-12) -> bool:
    n = round(z.real)
    return n <= 0 and abs(z - n) < tol


def chi(s: complex) -> complex:
    """chi(s) = pi^(s-1/2) Gamma((1-s)/2) / Gamma(s/2).

    Zeros of 1/Gamma(s/2) (at s = 0, -2, -4, ...) give chi = 0; poles of
    Gamma((1-s)/2) (at s = 1, 3, 5, ...) raise PoleError.
    """
    s = complex(s)
    if _near_nonpositive_int((1.0 - s) / 2.0):
        raise PoleError(f"chi has a pole at s = {s}")
    if _near_nonpositive_int(s / 2.0):
        return 0.0 + 0.0j
    log_chi = (s - 0.5) * math.log(math.pi) + ln_gamma((1.0 - s) / 2.0) - ln_gamma(s / 2.0)
    return cmath.exp(log_chi)


def chi_sin_form(s: complex) -> complex:
    """chi via the equivalent form 2^s pi^(s-1) sin(pi s / 2) Gamma(1 - s).

    Kept as an independent cross-check of chi(); the sine factor overflows
    for large |Im s|, so this form is only useful at moderate height.
    """
    s = complex(s)
    if _near_nonpositive_int(1.0 - s):
        raise PoleError(f"Gamma(1-s) pole at s = {s}")
    return 2.0 ** s * math.pi ** (s - 1.0) * cmath.sin(0.5 * math.pi * s) * cmath.exp(ln_gamma(1.0 - s))


def theta(t: float) -> float:
    """Continuous branch of -1/2 arg chi(1/2 + it), anchored at theta(0) = 0.

    On the critical line chi(1/2+it) = pi^(it) Gamma(1/4 - it/2)/Gamma(1/4 + it/2),
    so the unwrapped phase is Im ln_gamma(1/4 + it/2) - (t/2) log pi; ln_gamma
    is analytic along the vertical line Re z = 1/4, which makes this branch
    continuous in t with no explicit tracking.
    """
    return ln_gamma(complex(0.25, 0.5 * t)).imag - 0.5 * t * math.log(math.pi)


def theta_array(t: np.ndarray) -> np.ndarray:
    """Vectorized theta for real arrays."""
    t = np.asarray(t, dtype=float)
    return ln_gamma_array(0.25 + 0.5j * t).imag - 0.5 * t * math.log(math.pi)


def theta_asymptotic(t: float) -> float:
    """Asymptotic series t/2 log(t/2pi) - t/2 - pi/8 + 1/(48t) + 7/(5760 t^3).

    Cross-check oracle only; error is O(t^-5).
    """
    if t <= 0.0:
        raise ValueError("asymptotic form needs t > 0")
    return (0.5 * t * math.log(0.5 * t / math.pi) - 0.5 * t - math.pi / 8.0
            + 1.0 / (48.0 * t) + 7.0 / (5760.0 * t ** 3))
