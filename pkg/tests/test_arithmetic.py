import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sine_moments.arithmetic import (DivisorTable, a_m, divisor_sieve,
                                     offdiag_sum, sieve_cache_load,
                                     sieve_cache_save, sum_d2, sum_d2_over_n)
from sine_moments.errors import (ConvergenceError, FormatError,
                                 MemoryBudgetError, SieveTooSmall, TooLarge,
                                 TruncationError)

# frozen goldens
SUM_D2_1E6 = 421094344
OFFDIAG_W_100 = 9811.0220379675494
OFFDIAG_U_100 = 427.39026183383931
A3_GOLDEN = 0.049321673579399115


def d_bruteforce(n):
    return sum(1 for k in range(1, n + 1) if n % k == 0)


class TestSieve:
    def test_small_values(self, table_small):
        expected = [1, 2, 2, 3, 2, 4, 2, 4, 3, 4, 2, 6]
        assert list(table_small.d[1:13]) == expected

    def test_brute_force(self, table_small):
        for n in range(1, 200):
            assert table_small.d[n] == d_bruteforce(n)

    def test_memory_budget(self):
        with pytest.raises(MemoryBudgetError):
            divisor_sieve(10 ** 6, memory_budget=1000)

    def test_limit_validation(self):
        with pytest.raises(ValueError):
            divisor_sieve(0)

    @given(st.integers(2, 80), st.integers(2, 80))
    @settings(max_examples=60, deadline=None)
    def test_multiplicative(self, m, n):
        if math.gcd(m, n) != 1:
            return
        t = divisor_sieve(m * n)
        assert t.d[m * n] == t.d[m] * t.d[n]


class TestSums:
    def test_sum_d2_golden(self, table_1e6):
        assert sum_d2(10 ** 6, table_1e6) == SUM_D2_1E6

    def test_sum_d2_brute(self, table_small):
        assert sum_d2(50, table_small) == sum(d_bruteforce(n) ** 2
                                              for n in range(1, 51))

    def test_sum_d2_guard(self, table_small):
        with pytest.raises(SieveTooSmall):
            sum_d2(10 ** 5, table_small)

    def test_sum_d2_over_n_vs_fsum(self, table_small):
        direct = math.fsum(int(table_small.d[n]) ** 2 / n
                           for n in range(1, 10 ** 4 + 1))
        assert abs(sum_d2_over_n(10 ** 4, table_small) - direct) < 1e-12

    def test_offdiag_goldens(self, table_small):
        assert abs(offdiag_sum(100, True, table_small) - OFFDIAG_W_100) < 1e-8
        assert abs(offdiag_sum(100, False, table_small) - OFFDIAG_U_100) < 1e-9

    def test_offdiag_brute(self, table_small):
        T = 20
        acc = 0.0
        for n in range(2, T + 1):
            for m in range(1, n):
                acc += (table_small.d[m] * table_small.d[n]
                        / (math.sqrt(m * n) * math.log(n / m)))
        assert abs(offdiag_sum(T, True, table_small) - acc) < 1e-10 * acc

    def test_offdiag_guard(self, table_small):
        with pytest.raises(TooLarge):
            offdiag_sum(5001, True, table_small)


class TestEulerProduct:
    def test_a3_golden(self):
        res = a_m(3)
        assert abs(res.value - A3_GOLDEN) < 1e-10

    def test_tail_bound_shrinks_with_prime_limit(self):
        t1 = a_m(2, prime_limit=10 ** 4).tail_bound
        t2 = a_m(2, prime_limit=10 ** 6).tail_bound
        assert t2 < t1

    def test_consistent_across_prime_limits(self):
        r1 = a_m(3, prime_limit=10 ** 5)
        r2 = a_m(3, prime_limit=10 ** 6)
        assert abs(r1.value - r2.value) <= 2.0 * (r1.tail_bound + r2.tail_bound)

    def test_divergent_truncation_raises(self):
        with pytest.raises(ConvergenceError):
            a_m(6, j_terms=3)

    def test_validation(self):
        with pytest.raises(ValueError):
            a_m(0)
        with pytest.raises(ValueError):
            a_m(2, prime_limit=10)


class TestCache:
    def test_round_trip(self, table_small, tmp_path):
        path = tmp_path / "d.bin"
        sieve_cache_save(table_small, path)
        loaded = sieve_cache_load(path)
        assert loaded.limit == table_small.limit
        assert np.array_equal(loaded.d, table_small.d)

    def test_corrupt_payload(self, table_small, tmp_path):
        path = tmp_path / "d.bin"
        sieve_cache_save(table_small, path)
        raw = bytearray(path.read_bytes())
        raw[100] ^= 0xFF
        path.write_bytes(bytes(raw))
        with pytest.raises(FormatError):
            sieve_cache_load(path)

    def test_bad_magic(self, table_small, tmp_path):
        path = tmp_path / "d.bin"
        sieve_cache_save(table_small, path)
        raw = bytearray(path.read_bytes())
        raw[0:4] = b"NOPE"
        path.write_bytes(bytes(raw))
        with pytest.raises(FormatError):
            sieve_cache_load(path)

    def test_truncated(self, table_small, tmp_path):
        path = tmp_path / "d.bin"
        sieve_cache_save(table_small, path)
        path.write_bytes(path.read_bytes()[:500])
        with pytest.raises(TruncationError):
            sieve_cache_load(path)

    def test_second_sieve_oracle(self, tmp_path):
        # independent O(n log n) sieve: increment every multiple
        limit = 3000
        d = np.zeros(limit + 1, dtype=np.uint32)
        for i in range(1, limit + 1):
            d[i::i] += 1
        assert np.array_equal(divisor_sieve(limit).d, d)
