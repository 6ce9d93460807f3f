"""Shifted-moment integrals of |zeta| products on the critical line.

Computes (1 / (T (log T)^(M^2))) * integral of
prod_j zeta(1/2 + i t + 2 pi i mu_j / log t) * conj(same with nu_j) dt
by composite Gauss-Legendre panels whose width tracks the local mean zero
gap 2 pi / log t, and compares against the sine-kernel predictions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .arithmetic import a_m
from .errors import BudgetExceeded
from .predictions import ShiftConfig, conjecture_rhs, kernel_t, theorem1_rhs
from .zeta_eval import ZetaEvalConfig, DEFAULT_CONFIG, zeta_critical_array

_TWO_PI = 2.0 * math.pi


@dataclass
class QuadraturePolicy:
    """Node placement: nodes_per_gap points per mean zero gap 2 pi / log t,
    grouped into Gauss-Legendre panels of panel_order nodes."""

    nodes_per_gap: float = 6.0
    panel_order: int = 16
    max_nodes: int = 5_000_000
    error_order: int = 8  # lower-order companion pass for the error estimate

    def __post_init__(self):
        if self.nodes_per_gap < 2.0:
            raise ValueError("nodes_per_gap must be >= 2")
        if self.panel_order < 2:
            raise ValueError("panel_order must be >= 2")


DEFAULT_POLICY = QuadraturePolicy()


@dataclass
class MomentEstimate:
    cfg: ShiftConfig
    T0: float
    T: float
    window: str  # from_T0 | dyadic
    raw_integral: complex
    normalized: complex
    prediction: complex
    nodes_used: int
    est_quadrature_error: float


@lru_cache(maxsize=8)
def _cached_am(M: int) -> float:
    return 1.0 if M == 1 else a_m(M).value


def attach_prediction(cfg: ShiftConfig, aM: float | None = None) -> complex:
    """The conjectured limit for this shift configuration (a_M computed from
    the Euler product when not supplied)."""
    if aM is None:
        aM = _cached_am(cfg.M)
    return conjecture_rhs(cfg, aM).value


def _panel_bounds(lo: float, hi: float, breakpoints, policy: QuadraturePolicy) -> np.ndarray:
    """Panels of width pi * panel_order / (nodes_per_gap * log t), clipped so
    every requested breakpoint is also a panel edge."""
    marks = sorted(b for b in breakpoints if lo < b <= hi)
    if not marks or marks[-1] < hi:
        marks.append(hi)
    bounds = [lo]
    t = lo
    for mark in marks:
        while t < mark:
            w = math.pi * policy.panel_order / (policy.nodes_per_gap * math.log(t))
            t = min(t + w, mark)
            bounds.append(t)
    return np.array(bounds)


def _integrate(cfg: ShiftConfig, bounds: np.ndarray, order: int,
               zeta_cfg: ZetaEvalConfig) -> np.ndarray:
    """Per-panel Gauss-Legendre integrals of the 2M-fold product, evaluated
    with one vectorized zeta pass per distinct shift value."""
    nodes, wts = np.polynomial.legendre.leggauss(order)
    mid = 0.5 * (bounds[:-1] + bounds[1:])
    half = 0.5 * (bounds[1:] - bounds[:-1])
    ts = (mid[:, None] + half[:, None] * nodes[None, :]).ravel()
    log_t = np.log(ts)
    f = np.ones(len(ts), dtype=complex)
    cache = {}
    for s in cfg.mu:
        key = float(s)
        if key not in cache:
            cache[key] = zeta_critical_array(ts + _TWO_PI * key / log_t, zeta_cfg)
        f = f * cache[key]
    for s in cfg.nu:
        key = float(s)
        if key not in cache:
            cache[key] = zeta_critical_array(ts + _TWO_PI * key / log_t, zeta_cfg)
        f = f * np.conj(cache[key])
    return (f.reshape(-1, order) @ wts) * half


def _run(cfg: ShiftConfig, lo: float, hi: float, breakpoints,
         policy: QuadraturePolicy, zeta_cfg: ZetaEvalConfig):
    """Cumulative raw integrals and error estimates at each breakpoint."""
    bounds = _panel_bounds(lo, hi, breakpoints, policy)
    n_panels = len(bounds) - 1
    nodes_needed = n_panels * (policy.panel_order + policy.error_order)
    if nodes_needed > policy.max_nodes:
        raise BudgetExceeded(
            f"{nodes_needed} nodes needed, budget {policy.max_nodes}")
    main = _integrate(cfg, bounds, policy.panel_order, zeta_cfg)
    low = _integrate(cfg, bounds, policy.error_order, zeta_cfg)
    # panel-index-ordered cumulative reduction: deterministic by construction
    cum_main = np.cumsum(main)
    cum_err = np.cumsum(np.abs(main - low))
    edge = bounds[1:]
    out = []
    for b in sorted(b for b in breakpoints if lo < b <= hi):
        i = int(np.searchsorted(edge, b * (1.0 - 1e-15)))
        i = min(i, n_panels - 1)
        nodes_used = (i + 1) * (policy.panel_order + policy.error_order)
        out.append((complex(cum_main[i]), float(cum_err[i]), nodes_used))
    return out


def shifted_moment(cfg: ShiftConfig, T0: float, T: float,
                   window: str = "from_T0",
                   policy: QuadraturePolicy = DEFAULT_POLICY,
                   zeta_cfg: ZetaEvalConfig = DEFAULT_CONFIG,
                   aM: float | None = None) -> MomentEstimate:
    """Normalized shifted moment over [T0, T] (from_T0) or [T, 2T] (dyadic);
    both conventions divide the raw integral by T (log T)^(M^2)."""
    if not T0 > 1.0:
        raise ValueError("T0 must be > 1")
    if window not in ("from_T0", "dyadic"):
        raise ValueError("window must be from_T0 or dyadic")
    if window == "from_T0":
        if T <= T0:
            raise ValueError("T must exceed T0")
        lo, hi = T0, T
    else:
        lo, hi = T, 2.0 * T
    (raw, err, nodes), = _run(cfg, lo, hi, [hi], policy, zeta_cfg)
    norm = T * math.log(T) ** (cfg.M ** 2)
    return MomentEstimate(cfg=cfg, T0=T0, T=T, window=window, raw_integral=raw,
                          normalized=raw / norm,
                          prediction=attach_prediction(cfg, aM),
                          nodes_used=nodes, est_quadrature_error=err / norm)


def moment_scan(cfg: ShiftConfig, T_list, T0: float = 10.0,
                policy: QuadraturePolicy = DEFAULT_POLICY,
                zeta_cfg: ZetaEvalConfig = DEFAULT_CONFIG,
                aM: float | None = None) -> list:
    """One from_T0 estimate per T in the increasing T_list; the panel grid to
    max(T_list) is built once, with each T forced onto a panel edge, so nested
    windows reuse the same zeta evaluations."""
    T_list = [float(T) for T in T_list]
    if T_list != sorted(set(T_list)):
        raise ValueError("T_list must be strictly increasing")
    if not T_list:
        return []
    if T_list[0] <= T0:
        raise ValueError("all T must exceed T0")
    pred = attach_prediction(cfg, aM)
    results = _run(cfg, T0, T_list[-1], T_list, policy, zeta_cfg)
    out = []
    for T, (raw, err, nodes) in zip(T_list, results):
        norm = T * math.log(T) ** (cfg.M ** 2)
        out.append(MomentEstimate(cfg=cfg, T0=T0, T=T, window="from_T0",
                                  raw_integral=raw, normalized=raw / norm,
                                  prediction=pred, nodes_used=nodes,
                                  est_quadrature_error=err / norm))
    return out


def ratio_curve(M: int, delta_list, T: float, T0: float = 10.0,
                policy: QuadraturePolicy = DEFAULT_POLICY,
                zeta_cfg: ZetaEvalConfig = DEFAULT_CONFIG) -> list:
    """Shape test M(delta, T) / M(0, T) against the predicted ratio:
    e^{-i pi delta} S(pi delta) for M=1 (shifts (delta; 0)) and 3 T(pi delta)
    for M=2 (diagonal shifts (0, delta; 0, delta)).

    Returns dict rows: delta, empirical, predicted, deviation."""
    if M not in (1, 2):
        raise ValueError("ratio_curve supports M in {1, 2}")

    def cfg_for(d: float) -> ShiftConfig:
        if M == 1:
            return ShiftConfig(1, [d], [0.0])
        return ShiftConfig(2, [0.0, d], [0.0, d])

    base = shifted_moment(cfg_for(0.0), T0, T, "from_T0", policy, zeta_cfg,
                          aM=1.0).normalized
    rows = []
    for d in delta_list:
        d = float(d)
        if d == 0.0:
            emp = 1.0 + 0.0j
        else:
            emp = shifted_moment(cfg_for(d), T0, T, "from_T0", policy,
                                 zeta_cfg, aM=1.0).normalized / base
        if M == 1:
            pred = theorem1_rhs(d, 0.0)
        else:
            pred = complex(3.0 * kernel_t(math.pi * d))
        rows.append({"delta": d, "empirical": complex(emp), "predicted": pred,
                     "deviation": abs(complex(emp) - pred)})
    return rows
