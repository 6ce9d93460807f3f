"""Divisor-function sieve, divisor-sum growth checks, and the Euler product
a_M over the primes.

The divisor sums back the fourth-moment diagonal; a_M is the arithmetic
factor multiplying the random-matrix prediction for the 2M-th shifted moment.
"""

from __future__ import annotations

import math
import struct
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (ConvergenceError, FormatError, MemoryBudgetError,
                     SieveTooSmall, TooLarge, TruncationError)

# Prime zeta values P(s) = sum over primes p^-s, used for the a_M tail.
_PRIME_ZETA_2 = 0.45224742004106549850654336483224793417
_PRIME_ZETA_3 = 0.17476263929944353642311331466570670097
_PRIME_ZETA_4 = 0.07699313976456354065205740136036531093

_CACHE_MAGIC = b"ZMD2"
_CACHE_VERSION = 1

DEFAULT_MEMORY_BUDGET = 1 << 31  # bytes


@dataclass
class DivisorTable:
    """Exact divisor counts d(n) for 1 <= n <= limit; d[0] is unused."""

    limit: int
    d: np.ndarray  # uint32, length limit + 1

    def __post_init__(self):
        self._cum_d2 = None

    def _prefix_d2(self) -> np.ndarray:
        if self._cum_d2 is None:
            sq = self.d.astype(np.uint64)
            sq *= sq
            self._cum_d2 = np.cumsum(sq)
        return self._cum_d2


def divisor_sieve(limit: int, memory_budget: int = DEFAULT_MEMORY_BUDGET) -> DivisorTable:
    """Sieve exact d(n) for n <= limit.

    Uses the pair trick: each i <= sqrt(n) with i | n contributes the pair
    (i, n/i), so only sqrt(limit) strided passes are needed.
    """
    if not 1 <= limit <= 2 ** 31:
        raise ValueError("limit must be in [1, 2^31]")
    if 4 * (limit + 1) > memory_budget:
        raise MemoryBudgetError(
            f"sieve of limit {limit} needs {4 * (limit + 1)} bytes "
            f"(budget {memory_budget})")
    d = np.zeros(limit + 1, dtype=np.uint32)
    i = 1
    while i * i <= limit:
        d[i * i] += 1           # square: divisor i counted once
        d[i * i + i::i] += 2    # n > i^2: divisors i and n/i
        i += 1
    return DivisorTable(limit=limit, d=d)


def sum_d2(T: int, table: DivisorTable) -> int:
    """Exact integer sum of d(n)^2 for n <= T."""
    if T > table.limit:
        raise SieveTooSmall(f"need d(n) up to {T}, table holds {table.limit}")
    if T < 1:
        return 0
    return int(table._prefix_d2()[T])


def _compensated_sum(x: np.ndarray) -> float:
    """Sum with error O(eps * total): pairwise chunk sums combined exactly."""
    chunk = 1 << 15
    return math.fsum(np.add.reduceat(x, np.arange(0, len(x), chunk)))


def sum_d2_over_n(T: int, table: DivisorTable) -> float:
    """Compensated sum of d(n)^2 / n for n <= T; grows like log^4(T)/(4 pi^2)."""
    if T > table.limit:
        raise SieveTooSmall(f"need d(n) up to {T}, table holds {table.limit}")
    n = np.arange(1, T + 1, dtype=np.float64)
    d = table.d[1:T + 1].astype(np.float64)
    return _compensated_sum(d * d / n)


def offdiag_sum(T: int, weighted: bool, table: DivisorTable) -> float:
    """Exact double sum over 1 <= m < n <= T of w(m) w(n) / (sqrt(mn) log(n/m)),
    with w = d for weighted=True and w = 1 otherwise.  Guarded at T <= 5000."""
    if T > 5000:
        raise TooLarge("offdiag_sum is O(T^2); T must be <= 5000")
    if T > table.limit:
        raise SieveTooSmall(f"need d(n) up to {T}, table holds {table.limit}")
    m = np.arange(1, T + 1, dtype=np.float64)
    log_m = np.log(m)
    inv_sqrt = 1.0 / np.sqrt(m)
    d = table.d[1:T + 1].astype(np.float64)
    rows = []
    for n in range(2, T + 1):
        k = n - 1  # pairs m = 1 .. n-1
        row = inv_sqrt[:k] / (log_m[k] - log_m[:k]) * inv_sqrt[k]
        if weighted:
            row = row * d[:k] * d[k]
        rows.append(float(np.sum(row)))
    return math.fsum(rows)


@dataclass
class EulerProductResult:
    M: int
    value: float
    prime_limit: int
    j_terms: int
    tail_bound: float


def _primes_up_to(n: int) -> np.ndarray:
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for i in range(2, int(n ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i::i] = False
    return np.nonzero(sieve)[0]


def _log_factor_coeffs(M: int, order: int = 6):
    """Exact power-series coefficients c_2..c_order (in 1/p) of the log of the
    per-prime factor (1 - 1/p)^(M^2) * sum_j binom(j+M-1, j)^2 p^-j.

    The 1/p coefficient vanishes (b_1 = M^2), which is why the Euler product
    converges; the exact rationals let large primes be summed without the
    cancellation of log1p(-x) against log(total).
    """
    b = [Fraction(math.comb(j + M - 1, j)) ** 2 for j in range(order + 1)]
    y = [Fraction(0)] + b[1:]  # B(x) - 1, coefficients by degree
    z = [Fraction(0)] * (order + 1)
    power = [Fraction(1)] + [Fraction(0)] * order
    for k in range(1, order + 1):
        nxt = [Fraction(0)] * (order + 1)
        for i, pi in enumerate(power):
            if pi:
                for j in range(1, order + 1 - i):
                    nxt[i + j] += pi * y[j]
        power = nxt
        sign = Fraction((-1) ** (k + 1), k)
        for deg in range(order + 1):
            z[deg] += sign * power[deg]
    m2 = Fraction(M * M)
    coeffs = [z[k] - m2 / k for k in range(1, order + 1)]
    assert coeffs[0] == 0
    return [float(c) for c in coeffs[1:]]  # c_2 .. c_order


def a_m(M: int, prime_limit: int = 10 ** 6, j_terms: int = 200) -> EulerProductResult:
    """The arithmetic factor
    a_M = prod_p (1 - 1/p)^(M^2) sum_j (Gamma(j+M) / (j! Gamma(M)))^2 p^-j.

    Accumulated in log space over sieved primes; the truncated prime range is
    closed with the exact second- and third-order tail via the prime zeta
    function, leaving a fourth-order tail_bound.  a_1 = 1 and a_2 = 6/pi^2.
    """
    if M < 1:
        raise ValueError("M must be >= 1")
    if prime_limit < 100:
        raise ValueError("prime_limit must be >= 100")
    primes = _primes_up_to(prime_limit).astype(np.float64)
    c2, c3, c4, c5, c6 = _log_factor_coeffs(M, order=6)
    # small primes: direct inner series in log space
    split = np.searchsorted(primes, min(1e4, float(prime_limit)), side="right")
    log_terms = np.empty(split)
    trunc_resid = 0.0
    for i, p in enumerate(primes[:split]):
        x = 1.0 / p
        term = 1.0
        total = 1.0
        j = 0
        while j < j_terms:
            term *= ((j + M) / (j + 1.0)) ** 2 * x
            total += term
            j += 1
            if term < 1e-18 * total:
                break
        # close the remaining geometric-ish tail
        ratio = ((j + M) / (j + 1.0)) ** 2 * x
        if ratio < 1.0:
            tail = term * ratio / (1.0 - ratio)
            total += tail
            trunc_resid = max(trunc_resid, tail / total)
        else:
            raise ConvergenceError(f"inner series diverging at p = {p}")
        log_terms[i] = M * M * math.log1p(-x) + math.log(total)
    log_a = math.fsum(log_terms)
    # large primes: cancellation-free exact series c2/p^2 + ... + c5/p^5
    big = primes[split:]
    if len(big):
        inv2 = big ** -2.0
        inv = 1.0 / big
        log_a += _compensated_sum(inv2 * (c2 + inv * (c3 + inv * (c4 + inv * c5))))
        trunc_resid += abs(c6) * float(np.sum(inv2 ** 3))
    # primes beyond the sieve: exact second/third-order tail via prime zeta
    s2 = float(np.sum(primes ** -2.0))
    s3 = float(np.sum(primes ** -3.0))
    s4 = float(np.sum(primes ** -4.0))
    log_a += c2 * (_PRIME_ZETA_2 - s2) + c3 * (_PRIME_ZETA_3 - s3)
    tail_bound = 2.0 * abs(c4) * (_PRIME_ZETA_4 - s4) + trunc_resid
    if tail_bound > 1e-6:
        raise ConvergenceError(f"a_M tail bound {tail_bound:.3e} exceeds 1e-6")
    return EulerProductResult(M=M, value=math.exp(log_a), prime_limit=prime_limit,
                              j_terms=j_terms, tail_bound=tail_bound)


def _fnv1a64(payload: bytes) -> int:
    try:
        return int(_fnv1a64_numba(np.frombuffer(payload, dtype=np.uint8)))
    except ImportError:
        h = 0xCBF29CE484222325
        for b in payload:
            h = ((h ^ b) * 0x100000001B3) & 0xFFFFFFFFFFFFFFFF
        return h


def _fnv1a64_numba(data):
    global _fnv1a64_numba
    from numba import njit, uint64

    @njit(cache=True)
    def _impl(buf):
        h = uint64(0xCBF29CE484222325)
        prime = uint64(0x100000001B3)
        for i in range(buf.size):
            h = uint64((h ^ uint64(buf[i])) * prime)
        return h

    _fnv1a64_numba = _impl
    return _impl(data)


def sieve_cache_save(table: DivisorTable, path) -> None:
    """Write the table as: magic "ZMD2", u32 version, u64 limit, u32 counts
    d(1..limit), u64 FNV-1a checksum of the counts bytes (all little-endian)."""
    payload = table.d[1:].astype('<u4').tobytes()
    with open(path, "wb") as fh:
        fh.write(_CACHE_MAGIC)
        fh.write(struct.pack("<I", _CACHE_VERSION))
        fh.write(struct.pack("<Q", table.limit))
        fh.write(payload)
        fh.write(struct.pack("<Q", _fnv1a64(payload)))


def sieve_cache_load(path) -> DivisorTable:
    """Inverse of sieve_cache_save; FormatError on bad magic/version/checksum,
    TruncationError on a short file."""
    with open(path, "rb") as fh:
        head = fh.read(16)
        if len(head) < 16:
            raise TruncationError("cache header truncated")
        if head[:4] != _CACHE_MAGIC:
            raise FormatError(f"bad magic {head[:4]!r}")
        (version,) = struct.unpack("<I", head[4:8])
        if version != _CACHE_VERSION:
            raise FormatError(f"unsupported cache version {version}")
        (limit,) = struct.unpack("<Q", head[8:16])
        payload = fh.read(4 * limit)
        if len(payload) < 4 * limit:
            raise TruncationError("cache payload truncated")
        tail = fh.read(8)
        if len(tail) < 8:
            raise TruncationError("cache checksum missing")
        (checksum,) = struct.unpack("<Q", tail)
    if _fnv1a64(payload) != checksum:
        raise FormatError("cache checksum mismatch")
    d = np.empty(limit + 1, dtype=np.uint32)
    d[0] = 0
    d[1:] = np.frombuffer(payload, dtype='<u4')
    return DivisorTable(limit=int(limit), d=d)
