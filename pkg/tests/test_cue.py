import cmath
import math

import numpy as np
import pytest

from conftest import random_config
from sine_moments.cue import (CueEstimate, UnitaryMatrix, charpoly_product,
                              cue_exact_det, cue_exact_perm, cue_mc,
                              haar_sample, scaling_check)
from sine_moments.errors import CoalescenceError
from sine_moments.predictions import ShiftConfig


class TestHaarSample:
    def test_unitarity(self):
        for N in (1, 5, 64):
            u = haar_sample(N, seed=1, index=0)
            assert u.unitarity_residual() < 1e-12

    def test_det_modulus(self):
        u = haar_sample(32, seed=2, index=5)
        assert abs(abs(np.linalg.det(u.entries)) - 1.0) < 1e-10

    def test_stream_keyed_by_seed_and_index(self):
        a = haar_sample(8, seed=3, index=4)
        b = haar_sample(8, seed=3, index=4)
        c = haar_sample(8, seed=3, index=5)
        assert np.array_equal(a.entries, b.entries)
        assert not np.array_equal(a.entries, c.entries)

    def test_trace_moment(self):
        # E |tr U|^2 = 1 for the CUE
        vals = [abs(np.trace(haar_sample(8, seed=4, index=i).entries)) ** 2
                for i in range(2000)]
        mean = np.mean(vals)
        se = np.std(vals, ddof=1) / math.sqrt(len(vals))
        assert abs(mean - 1.0) < 4.0 * se

    def test_domain(self):
        with pytest.raises(ValueError):
            haar_sample(513, seed=0)


class TestCharpolyProduct:
    def test_empty_product(self):
        u = haar_sample(4, seed=5)
        assert charpoly_product(u, None) == 1.0

    def test_cofactor_oracle_3x3(self):
        u = haar_sample(3, seed=6)
        cfg = ShiftConfig(1, [0.3], [-0.2])
        z_mu = cmath.exp(2j * math.pi * 0.3 / 3.0)
        z_nu = cmath.exp(2j * math.pi * -0.2 / 3.0)

        def det3(m):
            return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                    - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                    + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))

        a = u.entries - z_mu * np.eye(3)
        b = u.entries - z_nu * np.eye(3)
        expected = det3(a.tolist()) * np.conj(det3(b.tolist()))
        assert charpoly_product(u, cfg) == pytest.approx(expected, rel=1e-12)

    def test_conjugation_symmetry(self):
        u = haar_sample(6, seed=7)
        cfg = ShiftConfig(2, [0.3, -0.1], [0.2, -0.4])
        # conjugating U conjugates the evaluation points, i.e. negates all
        # shifts; the mu/nu roles stay put
        u_conj = UnitaryMatrix(6, u.entries.conj())
        lhs = charpoly_product(u_conj, cfg.conjugated())
        rhs = np.conj(charpoly_product(u, cfg))
        assert lhs == pytest.approx(rhs, rel=1e-11)


class TestExactFormulas:
    def test_m1_diagonal(self):
        # the M=1 coincident-shift second moment is N + 1 (determinant entry
        # S_{N+1}(x, x)), not N; the 10^6-sample MC oracle agreed with N + 1
        cfg = ShiftConfig(1, [0.3], [0.3])
        assert cue_exact_det(20, cfg).value == pytest.approx(21.0)

    def test_m1_offdiagonal_golden(self):
        cfg = ShiftConfig(1, [0.15], [-0.15])
        val = cue_exact_det(16, cfg).value
        # M=1 reduces to the single Dirichlet-kernel entry S_{N+1}(a, b)
        d = 2.0 * math.pi * 0.3 / 16.0
        expected = (cmath.exp(0.5j * 16.0 * d) * math.sin(0.5 * 17.0 * d)
                    / math.sin(0.5 * d))
        assert val == pytest.approx(expected, rel=1e-12)

    def test_det_equals_perm(self):
        rng = np.random.default_rng(11)
        for _ in range(10):
            M = int(rng.integers(1, 4))
            N = int(rng.integers(M + 1, 65))
            cfg = random_config(rng, M)
            d = cue_exact_det(N, cfg).value
            p = cue_exact_perm(N, cfg).value
            assert abs(d - p) <= 1e-9 * abs(d)

    def test_perm_coalescence_error(self):
        with pytest.raises(CoalescenceError):
            cue_exact_perm(16, ShiftConfig(1, [0.1], [0.1 + 1e-9]))

    def test_det_confluent_path_continuous(self):
        near = ShiftConfig(2, [0.2, 0.2 + 1e-8], [0.6, -0.4])
        sep = ShiftConfig(2, [0.2, 0.2 + 1e-3], [0.6, -0.4])
        v_near = cue_exact_det(16, near).value
        v_sep = cue_exact_det(16, sep).value
        assert abs(v_near - v_sep) < 1e-2 * abs(v_sep)


class TestMonteCarlo:
    def test_matches_exact_small(self):
        cfg = ShiftConfig(1, [0.2], [-0.3])
        est = cue_mc(8, cfg, 400, seed=12)
        exact = cue_exact_det(8, cfg).value
        assert abs(est.value - exact) < 5.0 * est.stderr

    def test_seed_reproducible(self):
        cfg = ShiftConfig(1, [0.2], [-0.3])
        a = cue_mc(8, cfg, 200, seed=13)
        b = cue_mc(8, cfg, 200, seed=13)
        assert a.value == b.value
        assert a.stderr == b.stderr

    def test_threads_do_not_change_result(self):
        cfg = ShiftConfig(1, [0.2], [-0.3])
        a = cue_mc(8, cfg, 200, seed=14, threads=1)
        b = cue_mc(8, cfg, 200, seed=14, threads=4)
        assert a.value == b.value

    def test_sample_floor(self):
        with pytest.raises(ValueError):
            cue_mc(8, ShiftConfig(1, [0.1], [0.2]), 50, seed=0)


class TestScalingCheck:
    def test_m1_diagonal_rate(self):
        # f(N) = N + 1 at coincident shifts, so the relative deviation of
        # N^{-1} f from 1 is exactly 1/N
        cfg = ShiftConfig(1, [0.3], [0.3])
        rows = scaling_check([8, 16, 32], cfg)
        for r in rows:
            assert r["deviation"] == pytest.approx(1.0 / r["N"], rel=1e-9)

    def test_deviation_decreases(self):
        cfg = ShiftConfig(1, [0.3], [-0.2])
        rows = scaling_check([8, 16, 32, 64], cfg)
        devs = [r["deviation"] for r in rows]
        assert all(b < a for a, b in zip(devs, devs[1:]))

    def test_monotone_n_list_required(self):
        with pytest.raises(ValueError):
            scaling_check([16, 8], ShiftConfig(1, [0.3], [-0.2]))
