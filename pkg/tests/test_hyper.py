import math

import mpmath
import numpy as np
import pytest

from perispec.hyper import (
    MAX_PRECISION_BITS,
    EvalResult,
    HypergeometricSeries,
    InvalidSeriesError,
    PrecisionExhaustedError,
    default_max_terms,
    eval_1f2,
    eval_2f3,
    eval_3f4,
    eval_pfq,
    eval_pfq_float64,
)
from perispec.special import pochhammer_x
from perispec.xprec import Precision, XReal, required_bits


def bruteforce_pfq(nums, dens, z_sq, dps=60, kmax=2000):
    """Independent oracle: direct rising-factorial summation under mpmath.

    No shared code with eval_pfq: terms come from mpmath's rf/factorial at
    high decimal precision, not from the production term recurrence.
    """
    with mpmath.workdps(dps):
        total = mpmath.mpf(0)
        small = 0
        for k in range(kmax):
            t = mpmath.mpf(1)
            for a in nums:
                t *= mpmath.rf(mpmath.mpf(a), k)
            for b in dens:
                t /= mpmath.rf(mpmath.mpf(b), k)
            t *= (-mpmath.mpf(z_sq)) ** k / mpmath.factorial(k)
            total += t
            if k > 0 and abs(t) < mpmath.mpf(10) ** (-dps) * (1 + abs(total)):
                small += 1
                if small >= 5:
                    break
            else:
                small = 0
        return total


# frozen via bruteforce_pfq at 40+ digits
F23_AT_MINUS_001 = 0.9991433104973032
F12_AT_MINUS_1 = 0.7831299937241398


class TestEvalPfqExamples:
    def test_zero_argument_is_exactly_one(self):
        series = HypergeometricSeries((1.0, 1.5), (2.0, 3.5, 2.5))
        res = eval_pfq(series, 0.0, 1e-12)
        assert res.value == 1.0
        assert res.terms_used == 1

    def test_zero_numerator_truncates(self):
        # a numerator parameter 0 kills every k >= 1 term
        series = HypergeometricSeries((1.0, 0.0), (2.0, 3.5, 1.0))
        res = eval_pfq(series, 4.0, 1e-12)
        assert res.value == 1.0
        assert res.abs_error_estimate < 1e-28  # pure rounding bound, no truncation term

    def test_small_argument_against_bruteforce(self):
        series = HypergeometricSeries((1.0, 1.5), (2.0, 3.5, 2.5))
        res = eval_pfq(series, 0.01, 1e-12)
        assert res.value == pytest.approx(F23_AT_MINUS_001, rel=1e-13)
        ref = float(bruteforce_pfq((1.0, 1.5), (2.0, 3.5, 2.5), 0.01))
        assert res.value == pytest.approx(ref, rel=1e-13)
        # hand Taylor through k=1 brackets the value
        k1 = 1.0 * 1.5 / (2.0 * 3.5 * 2.5) * 0.01
        assert 1.0 - k1 < res.value < 1.0

    def test_wrappers_at_zero(self):
        assert eval_1f2(0.7, 1.3, 1.7, 0.0).value == 1.0
        assert eval_3f4(1.0, 2.5, 0.7, 2.0, 1.5, 2.3, 1.7, 0.0).value == 1.0

    def test_1f2_alternating_bracket(self):
        res = eval_1f2(1.5, 2.5, 2.5, 1.0, 1e-12)
        assert 0.0 < res.value < 1.0
        assert res.value == pytest.approx(F12_AT_MINUS_1, rel=1e-13)
        assert res.value == pytest.approx(float(bruteforce_pfq((1.5,), (2.5, 2.5), 1.0)), rel=1e-13)

    def test_2f3_wrapper_matches_generic(self):
        got = eval_2f3(1.0, 1.5, 2.0, 3.5, 2.5, 0.25, 1e-12)
        ref = eval_pfq(HypergeometricSeries((1.0, 1.5), (2.0, 3.5, 2.5)), 0.25, 1e-12)
        assert got.value == ref.value


class TestValidation:
    def test_nonpositive_integer_denominator_rejected(self):
        with pytest.raises(InvalidSeriesError):
            HypergeometricSeries((1.0,), (0.0, 2.0))
        with pytest.raises(InvalidSeriesError):
            HypergeometricSeries((1.0,), (-3.0, 2.0))

    def test_p_greater_than_q_rejected(self):
        with pytest.raises(InvalidSeriesError):
            HypergeometricSeries((1.0, 2.0), (3.0,))

    def test_negative_argument_rejected(self):
        series = HypergeometricSeries((1.0,), (2.0, 3.0))
        with pytest.raises(ValueError):
            eval_pfq(series, -1.0, 1e-12)

    @pytest.mark.parametrize("tol", [1e-16, 0.1])
    def test_target_rel_err_range(self, tol):
        series = HypergeometricSeries((1.0,), (2.0, 3.0))
        with pytest.raises(ValueError):
            eval_pfq(series, 1.0, tol)

    def test_eval_result_invariants(self):
        with pytest.raises(ValueError):
            EvalResult(value=1.0, abs_error_estimate=0.0, terms_used=0, precision_bits_used=64)
        with pytest.raises(ValueError):
            EvalResult(value=1.0, abs_error_estimate=-1.0, terms_used=1, precision_bits_used=64)

    def test_term_budget_exhaustion(self):
        series = HypergeometricSeries((1.0, 1.5), (2.0, 3.5, 2.5))
        with pytest.raises(PrecisionExhaustedError):
            eval_pfq(series, 100.0, 1e-12, max_terms=5)

    def test_precision_ceiling(self):
        series = HypergeometricSeries((1.0, 1.5), (2.0, 3.5, 2.5))
        z = 4e5  # required_bits(z) > MAX_PRECISION_BITS
        assert required_bits(z) > MAX_PRECISION_BITS
        with pytest.raises(PrecisionExhaustedError):
            eval_pfq(series, z * z, 1e-12)


class TestPrecisionPolicy:
    def test_precision_adequacy_randomized(self):
        # doubling the working precision moves the result by less than the
        # reported error estimate, over random series shapes and arguments
        rng = np.random.default_rng(424242)
        for _ in range(200):
            p = rng.integers(1, 4)
            nums = tuple(rng.uniform(0.1, 5.0, size=p))
            dens = tuple(rng.uniform(0.5, 6.0, size=p + 1))
            z = rng.uniform(0.0, 40.0)
            series = HypergeometricSeries(nums, dens)
            base = eval_pfq(series, z * z, 1e-12)
            doubled = eval_pfq(series, z * z, 1e-12, precision=Precision(2 * base.precision_bits_used))
            assert abs(doubled.value - base.value) <= base.abs_error_estimate

    def test_reported_bits_follow_policy(self):
        series = HypergeometricSeries((1.0, 1.5), (2.0, 3.5, 2.5))
        res = eval_pfq(series, 900.0, 1e-12)  # z = 30
        assert res.precision_bits_used == required_bits(30.0) == 180

    def test_term_cap_scales_with_argument(self):
        assert default_max_terms(10.0) == 10_000
        assert default_max_terms(5000.0) > 16_000


class TestRecurrenceConsistency:
    def test_term_recurrence_vs_direct_pochhammer(self):
        # partial sums through k = 30, recurrence vs direct rising factorials,
        # both in 200-bit arithmetic
        nums = (1.0, 1.5)
        dens = (2.0, 3.5, 2.5)
        z_sq = 9.0
        prec = Precision(200)
        direct = XReal(0, prec)
        for k in range(31):
            t = XReal(1, prec)
            for a in nums:
                t = t * pochhammer_x(a, k, prec)
            for b in dens:
                t = t / pochhammer_x(b, k, prec)
            t = t * (-XReal(z_sq, prec)) ** k / math.factorial(k)
            direct = direct + t
        term = XReal(1, prec)
        recur = XReal(1, prec)
        for k in range(30):
            num = -XReal(z_sq, prec)
            for a in nums:
                num = num * (XReal(a, prec) + k)
            den = XReal(k + 1, prec)
            for b in dens:
                den = den * (XReal(b, prec) + k)
            term = term * num / den
            recur = recur + term
        assert abs(float(direct - recur)) <= 1e-45 * abs(float(direct))

    def test_entire_function_sanity(self):
        series = HypergeometricSeries((1.0, 1.5), (2.0, 3.5, 2.5))
        for z_sq in np.linspace(0.0, 1600.0, 9):
            res = eval_pfq(series, float(z_sq), 1e-10)
            assert math.isfinite(res.value)


class TestCancellationWitness:
    def test_naive_double_summation_fails_at_z30(self):
        series = HypergeometricSeries((1.0, 1.5), (2.0, 3.5, 2.5))
        z_sq = 900.0
        ext = eval_pfq(series, z_sq, 1e-12)
        naive = eval_pfq_float64(series, z_sq)
        assert abs(naive - ext.value) / abs(ext.value) > 1e-6
        doubled = eval_pfq(series, z_sq, 1e-12, precision=Precision(2 * ext.precision_bits_used))
        assert abs(doubled.value - ext.value) <= 1e-12 * abs(ext.value)

    def test_naive_agrees_at_small_argument(self):
        series = HypergeometricSeries((1.0, 1.5), (2.0, 3.5, 2.5))
        ext = eval_pfq(series, 0.25, 1e-12)
        naive = eval_pfq_float64(series, 0.25)
        assert naive == pytest.approx(ext.value, rel=1e-12)
