"""Tests for gamma/beta/hypergeometric building blocks."""

import itertools
import math

import mpmath
import pytest
from hypothesis import given, strategies as st

from betaext import integrate_unit
from betaext.errors import DivergentSeries, DomainError, LowerParamPole, PoleError
from betaext.special import (
    beta_classical,
    beta_incomplete,
    gamma,
    hyp_1f1,
    hyp_pfq,
    pochhammer,
)

mpmath.mp.dps = 25


class TestGamma:
    def test_factorial_value(self):
        assert gamma(5.0) == 24.0

    def test_one(self):
        assert gamma(1.0) == 1.0

    def test_half(self):
        assert gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-15)

    @pytest.mark.parametrize("z", [0.1, 0.5, 1.3, 7.7, 23.4, 61.9, 101.5, 169.9])
    def test_thirteen_digits_on_real_axis(self, z):
        assert gamma(z) == pytest.approx(float(mpmath.gamma(z)), rel=1e-13)

    @pytest.mark.parametrize("z", [1 + 1j, 0.3 + 2j, -1.5 + 0.5j, 5 - 3j])
    def test_complex_against_mpmath(self, z):
        ref = complex(mpmath.gamma(z))
        assert abs(gamma(z) - ref) / abs(ref) < 2e-13

    def test_pole(self):
        with pytest.raises(PoleError):
            gamma(-3.0)
        with pytest.raises(PoleError):
            gamma(0.0)

    def test_overflow(self):
        with pytest.raises(OverflowError):
            gamma(172.0)


class TestPochhammer:
    def test_basic(self):
        assert pochhammer(3.0, 4) == 360.0

    def test_zero_factor(self):
        assert pochhammer(-2.0, 4) == 0.0

    @given(st.integers(min_value=0, max_value=12))
    def test_at_one_is_factorial(self, n):
        assert pochhammer(1.0, n) == float(math.factorial(n))

    @given(
        st.floats(min_value=-10, max_value=10, allow_nan=False),
        st.integers(min_value=0, max_value=20),
    )
    def test_recurrence(self, lam, n):
        assert pochhammer(lam, n) * (lam + n) == pytest.approx(
            pochhammer(lam, n + 1), rel=1e-12, abs=1e-12
        )


class TestBetaClassical:
    def test_reported_values(self):
        assert beta_classical(1.0, 0.25) == pytest.approx(4.0, abs=1e-12)
        assert beta_classical(10.0, 0.25) == pytest.approx(2.0582, rel=2e-4)

    def test_gamma_relation_value(self):
        assert beta_classical(2.0, 3.0) == pytest.approx(1.0 / 12.0, rel=1e-14)

    @given(
        st.floats(min_value=0.05, max_value=50),
        st.floats(min_value=0.05, max_value=50),
    )
    def test_symmetry_is_exact(self, a, b):
        assert beta_classical(a, b) == beta_classical(b, a)

    def test_domain(self):
        with pytest.raises(DomainError):
            beta_classical(0.0, 1.0)
        with pytest.raises(DomainError):
            beta_classical(2.0, -0.5)

    def test_agrees_with_quadrature(self):
        for a, b in itertools.product([0.3, 1.0, 2.5, 7.0], repeat=2):
            r = integrate_unit(lambda t, tc: t ** (a - 1) * tc ** (b - 1))
            exact = beta_classical(a, b)
            assert abs(r.value - exact) <= r.abs_err_est + 1e-14 * exact


class TestBetaIncomplete:
    def test_full_range_is_beta(self):
        assert beta_incomplete(1.0, 2.0, 3.0) == pytest.approx(1 / 12, abs=1e-15)

    def test_zero(self):
        assert beta_incomplete(0.0, 1.7, 0.3) == 0.0

    def test_uniform_midpoint(self):
        assert beta_incomplete(0.5, 1.0, 1.0) == pytest.approx(0.5, abs=1e-14)

    def test_closed_form_quadratic(self):
        # B_x(2,2) = x^2/2 - x^3/3
        assert beta_incomplete(0.3, 2.0, 2.0) == pytest.approx(0.036, abs=1e-15)

    @pytest.mark.parametrize(
        "x,a,b",
        [(0.2, 0.5, 4.0), (0.77, 2.5, 0.7), (0.95, 3.0, 3.0), (0.5, 0.3, 0.3)],
    )
    def test_against_mpmath(self, x, a, b):
        ref = float(mpmath.betainc(a, b, 0, x))
        assert beta_incomplete(x, a, b) == pytest.approx(ref, rel=1e-12)

    def test_domain(self):
        with pytest.raises(DomainError):
            beta_incomplete(1.2, 1.0, 1.0)
        with pytest.raises(DomainError):
            beta_incomplete(-0.1, 1.0, 1.0)


class TestHypPfq:
    def test_parameter_cancellation_gives_exp(self):
        r, _ = hyp_pfq([1.3], [1.3], 1.0)
        assert r.value == pytest.approx(math.e, rel=1e-14)

    def test_zero_argument(self):
        r, _ = hyp_pfq([2.3, 0.5], [1.1], 0.0)
        assert r.value == 1.0

    def test_gauss_log_value(self):
        r, _ = hyp_pfq([1.0, 1.0], [2.0], 0.5)
        assert r.value == pytest.approx(2.0 * math.log(2.0), rel=1e-14)

    def test_divergence_on_unit_circle(self):
        with pytest.raises(DivergentSeries):
            hyp_pfq([1.0, 1.0], [2.0], 1.0)

    def test_divergence_p_too_large(self):
        with pytest.raises(DivergentSeries):
            hyp_pfq([1.0, 1.0, 1.0], [2.0], 0.5)

    def test_terminating_series_allowed_anywhere(self):
        r, _ = hyp_pfq([-3.0, 2.0, 4.0], [1.5], 2.0)
        ref = complex(mpmath.hyper([-3, 2, 4], [1.5], 2.0)).real
        assert r.value == pytest.approx(ref, rel=1e-13)

    def test_lower_pole(self):
        with pytest.raises(LowerParamPole):
            hyp_pfq([1.0], [-2.0], 0.5)

    def test_termination_before_pole(self):
        r, _ = hyp_pfq([-2.0], [-5.0], 0.5)
        assert r.value == pytest.approx(1.2125, abs=1e-15)

    def test_diagnostics(self):
        r, diag = hyp_pfq([0.5], [1.5], 0.3)
        assert diag.stopped_by == "tolerance"
        assert diag.terms_used == r.evals
        assert diag.tail_bound >= 0


class TestHyp1f1:
    def test_exponential_collapse(self):
        r = hyp_1f1(2.0, 2.0, 3.0)
        assert r.value == pytest.approx(math.exp(3.0), rel=1e-13)

    def test_zero_argument(self):
        assert hyp_1f1(0.7, 1.9, 0.0).value == 1.0

    def test_closed_form_negative(self):
        r = hyp_1f1(1.0, 2.0, -5.0)
        assert r.value == pytest.approx((1 - math.exp(-5)) / 5, rel=1e-12)

    @pytest.mark.parametrize(
        "a,c,z",
        [
            (0.5, 2.0, -50.0),
            (1.5, 2.5, -300.0),
            (0.3, 0.7, -699.0),
            (2.5, 1.2, -100.0),
            (0.5, 2.0, -1000.0),
            (0.9, 3.1, -1e6),
        ],
    )
    def test_large_negative_argument(self, a, c, z):
        ref = float(mpmath.hyp1f1(a, c, z))
        assert hyp_1f1(a, c, z).value == pytest.approx(ref, rel=1e-10)

    def test_kummer_identity(self):
        for d, c in [(0.5, 1.5), (2.0, 3.7), (1.1, 0.9)]:
            for z in (-50.0, -10.0, 0.5, 10.0, 50.0):
                lhs = hyp_1f1(d, c, z).value
                rhs = math.exp(z) * hyp_1f1(c - d, c, -z).value
                assert lhs == pytest.approx(rhs, rel=1e-10)

    def test_lower_pole(self):
        with pytest.raises(LowerParamPole):
            hyp_1f1(1.0, -3.0, 0.5)

    def test_overflow(self):
        with pytest.raises(OverflowError):
            hyp_1f1(1.0, 1.0, 1e4)
