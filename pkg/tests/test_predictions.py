import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_config
from sine_moments.errors import CoalescenceError
from sine_moments.predictions import (ShiftConfig, conjecture_rhs, kernel_t,
                                      perm_sum, sinc_s, sine_kernel_ratio,
                                      theorem1_rhs, theorem2_rhs, verify_cue6,
                                      _riffles)


class TestKernels:
    def test_sinc_examples(self):
        assert sinc_s(0.0) == 1.0
        assert abs(sinc_s(math.pi)) < 1e-15
        assert abs(sinc_s(math.pi / 2.0) - 2.0 / math.pi) < 1e-15

    def test_sinc_taylor_branch_continuous(self):
        for x in (9.9e-5, 1.01e-4):
            assert abs(sinc_s(x) - math.sin(x) / x) < 1e-15

    def test_kernel_t_examples(self):
        assert kernel_t(0.0) == pytest.approx(1.0 / 3.0, abs=1e-15)
        assert kernel_t(math.pi) == pytest.approx(1.0 / math.pi ** 2, abs=1e-15)
        assert kernel_t(-1.7) == kernel_t(1.7)

    def test_kernel_t_taylor_branch_continuous(self):
        # the direct form loses ~1e-10 to cancellation this close to 0
        for x in (9.9e-4, 1.01e-3):
            s = math.sin(x) / x
            assert abs(kernel_t(x) - (1.0 - s * s) / (x * x)) < 1e-9

    @given(st.floats(-50.0, 50.0))
    @settings(max_examples=100, deadline=None)
    def test_sinc_bounded_and_even(self, x):
        assert abs(sinc_s(x)) <= 1.0 + 1e-15
        assert sinc_s(-x) == pytest.approx(sinc_s(x), abs=1e-15)


class TestClosedForms:
    def test_theorem1_examples(self):
        assert theorem1_rhs(0.3, 0.3) == pytest.approx(1.0)
        assert abs(theorem1_rhs(1.2, 0.2)) < 1e-15
        assert theorem1_rhs(0.75, 0.25) == pytest.approx(-2j / math.pi)

    def test_theorem2_examples(self):
        assert theorem2_rhs(0.4, 0.4) == pytest.approx(1.0 / (2.0 * math.pi ** 2))
        assert theorem2_rhs(1.0, 0.0) == pytest.approx(3.0 / (2.0 * math.pi ** 4))
        assert theorem2_rhs(0.1, 0.8) == pytest.approx(theorem2_rhs(0.8, 0.1))


class TestSineKernelRatio:
    def test_m1_reduces_to_sinc(self):
        cfg = ShiftConfig(1, [0.37], [-0.21])
        res = sine_kernel_ratio(cfg)
        assert res.method == "det_ratio"
        assert res.value == pytest.approx(sinc_s(math.pi * 0.58))

    def test_m2_diagonal_closed_form(self):
        a, b = 0.2, 0.7
        cfg = ShiftConfig(2, [a, b], [a, b])
        res = sine_kernel_ratio(cfg)
        x = math.pi * (a - b)
        s = sinc_s(x)
        expected = (1.0 - s * s) / (2.0 * math.pi * (b - a)) ** 2
        assert res.value == pytest.approx(expected, rel=1e-12)
        # times a_2 this is the theorem-2 limit
        assert conjecture_rhs(cfg, 6.0 / math.pi ** 2).value == pytest.approx(
            theorem2_rhs(a, b), rel=1e-12)

    def test_confluent_flagged_and_continuous(self):
        cfg_near = ShiftConfig(2, [0.1, 0.1 + 1e-6], [0.5, -0.3])
        cfg_sep = ShiftConfig(2, [0.1, 0.1 + 5e-4], [0.5, -0.3])
        near = sine_kernel_ratio(cfg_near)
        sep = sine_kernel_ratio(cfg_sep)
        assert near.coalescence_detected
        assert near.method == "confluent_limit"
        assert not sep.coalescence_detected
        assert abs(near.value - sep.value) < 1e-4

    def test_confluent_order(self):
        # the confluent value is the eps -> 0 limit of the separated ratio
        cfg0 = ShiftConfig(2, [0.1, 0.1], [0.5, -0.3])
        v0 = sine_kernel_ratio(cfg0).value
        errs = []
        for eps in (2e-3, 1e-3):
            cfg = ShiftConfig(2, [0.1, 0.1 + eps], [0.5, -0.3])
            errs.append(abs(sine_kernel_ratio(cfg).value - v0))
        # separated evaluations approach the confluent value at order eps^2
        assert errs[1] < errs[0]
        assert errs[1] < 1e-5


class TestPermSum:
    def test_m1_reduction(self):
        cfg = ShiftConfig(1, [0.4], [-0.1])
        assert perm_sum(cfg).value == pytest.approx(sinc_s(math.pi * 0.5), abs=1e-14)

    def test_term_count(self):
        assert len(list(_riffles(6))) == 20
        assert len(list(_riffles(2))) == 2

    def test_coalescence_error(self):
        with pytest.raises(CoalescenceError):
            perm_sum(ShiftConfig(2, [0.1, 0.5], [0.1 + 1e-10, -0.2]))

    def test_matches_ratio(self):
        rng = np.random.default_rng(8)
        for M in (1, 2, 3):
            for _ in range(5):
                cfg = random_config(rng, M)
                assert verify_cue6(cfg) < 1e-9


class TestConjectureRhs:
    def test_m1_equals_theorem1(self):
        cfg = ShiftConfig(1, [0.6], [-0.2])
        assert conjecture_rhs(cfg, 1.0).value == pytest.approx(
            theorem1_rhs(0.6, -0.2), rel=1e-13)

    def test_phase_convention_conjugation(self):
        # negating all shifts flips e^{-pi i sum} to e^{+pi i sum}: the two
        # values are complex conjugates (the determinant ratio is real)
        rng = np.random.default_rng(9)
        for M in (1, 2, 3):
            cfg = random_config(rng, M)
            a = conjecture_rhs(cfg, 0.7).value
            b = conjecture_rhs(cfg.conjugated(), 0.7).value
            assert b == pytest.approx(np.conj(a), rel=1e-10)

    def test_hermitian_symmetry(self):
        rng = np.random.default_rng(10)
        for M in (2, 3):
            cfg = random_config(rng, M)
            swapped = ShiftConfig(M, cfg.nu.copy(), cfg.mu.copy())
            assert abs(sine_kernel_ratio(swapped).value) == pytest.approx(
                abs(sine_kernel_ratio(cfg).value), rel=1e-10)

    def test_validation(self):
        cfg = ShiftConfig(1, [0.1], [0.2])
        with pytest.raises(ValueError):
            conjecture_rhs(cfg, -1.0)


class TestShiftConfig:
    def test_validation(self):
        with pytest.raises(ValueError):
            ShiftConfig(7, np.zeros(7), np.zeros(7))
        with pytest.raises(ValueError):
            ShiftConfig(2, [0.1], [0.2, 0.3])
