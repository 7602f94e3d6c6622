"""Tests for the regularized beta extensions and the termwise diagnostic."""

import itertools
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from betaext.errors import DomainError
from betaext.extended import ext_beta, gen_ext_beta, naive_series_partial_sums
from betaext.special import beta_classical


def midpoint_oracle(f, n=10**6, eps=1e-8):
    """Midpoint rule on (eps, 1-eps); the kernels vanish at the endpoints."""
    t = np.linspace(eps, 1 - eps, n, endpoint=False) + (1 - 2 * eps) / (2 * n)
    return float(np.mean(f(t)) * (1 - 2 * eps))


class TestExtBeta:
    def test_reduces_to_classical_at_p_zero(self):
        r = ext_beta(2.0, 3.0, 0.0)
        assert r.value == pytest.approx(1 / 12, rel=1e-12)

    def test_unit_shapes_oracle(self):
        # Frozen from the 1e6-panel midpoint oracle (recomputed below).
        r = ext_beta(1.0, 1.0, 1.0)
        assert r.value == pytest.approx(0.007029858406609658, rel=1e-11)
        live = midpoint_oracle(lambda t: np.exp(-1.0 / (t * (1 - t))))
        assert r.value == pytest.approx(live, rel=1e-11)

    def test_half_shapes_oracle(self):
        r = ext_beta(0.5, 0.5, 0.5)
        assert r.value == pytest.approx(0.14294329479319642, rel=1e-11)
        assert 0 < r.value < math.pi  # kernel <= 1 so the value is below B(.5,.5)

    def test_negative_p_rejected(self):
        with pytest.raises(DomainError):
            ext_beta(1.0, 1.0, -0.5)

    def test_p_zero_needs_classical_domain(self):
        with pytest.raises(DomainError):
            ext_beta(0.0, 1.0, 0.0)

    def test_positive_p_accepts_any_shapes(self):
        r = ext_beta(0.0, 0.0, 0.01)
        assert math.isfinite(r.value) and r.value > 0

    def test_monotone_decreasing_in_p(self):
        vals = [ext_beta(1.0, 1.0, p).value for p in (0.0, 0.5, 1.0, 2.0)]
        assert all(a > b > 0 for a, b in zip(vals, vals[1:]))


class TestGenExtBeta:
    def test_kernel_collapse_to_exponential(self):
        for p in (0.1, 1.0, 3.0):
            full = gen_ext_beta(1.5, 2.5, p, delta=1.7, zeta=1.7)
            plain = ext_beta(1.5, 2.5, p)
            assert full.value == pytest.approx(plain.value, abs=1e-12)

    def test_p_zero_is_classical_for_any_kernel_params(self):
        for a, b in itertools.product([0.3, 1.0, 2.5, 7.0], repeat=2):
            r = gen_ext_beta(a, b, 0.0, delta=1.3, zeta=2.2, kappa=0.7, mu=1.1)
            assert r.value == pytest.approx(beta_classical(a, b), rel=1e-10)

    def test_confluent_kernel_oracle(self):
        # Frozen from the midpoint oracle driven by scipy's hyp1f1.
        r = gen_ext_beta(1.0, 1.0, 1.0, delta=1.0, zeta=2.0)
        assert r.value == pytest.approx(0.1650436426942305, rel=1e-10)
        assert 0 < r.value < 1  # kernel stays inside (0, 1) for p > 0

    def test_scipy_cross_check(self):
        from scipy.special import hyp1f1 as scipy_hyp1f1

        r = gen_ext_beta(2.0, 1.5, 0.7, delta=0.8, zeta=1.9)
        live = midpoint_oracle(
            lambda t: t * (1 - t) ** 0.5 * scipy_hyp1f1(0.8, 1.9, -0.7 / (t * (1 - t)))
        )
        assert r.value == pytest.approx(live, rel=1e-9)

    def test_asymmetric_endpoint_exponents(self):
        from scipy.special import hyp1f1 as scipy_hyp1f1

        r = gen_ext_beta(1.2, 0.8, 0.5, delta=1.1, zeta=2.3, kappa=2.0, mu=0.5)
        live = midpoint_oracle(
            lambda t: t ** 0.2
            * (1 - t) ** -0.2
            * scipy_hyp1f1(1.1, 2.3, -0.5 / (t ** 2 * (1 - t) ** 0.5))
        )
        assert r.value == pytest.approx(live, rel=1e-8)

    def test_parameter_validation(self):
        with pytest.raises(DomainError):
            gen_ext_beta(1.0, 1.0, 1.0, delta=-1.0, zeta=2.0)
        with pytest.raises(DomainError):
            gen_ext_beta(1.0, 1.0, 1.0, delta=1.0, zeta=2.0, kappa=0.0)


class TestNaiveSeries:
    def test_example_five_seven(self):
        rows = naive_series_partial_sums(5.0, 7.0, 3.0, 8)
        assert [r.defined for r in rows] == [True] * 5 + [False] * 4
        # defined terms: (-3)^n/n! B(5-n,7-n)
        expect = sum(
            (-3.0) ** n / math.factorial(n) * beta_classical(5.0 - n, 7.0 - n)
            for n in range(5)
        )
        assert rows[-1].partial_sum == pytest.approx(expect, rel=1e-13)

    def test_p_zero_keeps_partial_at_beta(self):
        rows = naive_series_partial_sums(5.0, 7.0, 0.0, 3)
        for row in rows:
            assert row.partial_sum == pytest.approx(beta_classical(5.0, 7.0), rel=1e-15)

    def test_fractional_shapes(self):
        rows = naive_series_partial_sums(2.5, 2.5, 1.0, 5)
        assert [r.defined for r in rows] == [True, True, True, False, False, False]
        rows = naive_series_partial_sums(0.5, 0.5, 1.0, 2)
        assert [r.defined for r in rows] == [True, False, False]

    @given(
        st.floats(min_value=0.1, max_value=9.9, allow_nan=False),
        st.floats(min_value=0.1, max_value=9.9, allow_nan=False),
    )
    def test_undefined_marking_rule(self, a, b):
        rows = naive_series_partial_sums(a, b, 1.0, 12)
        if a == int(a) and b == int(b):
            cutoff = int(min(a, b))
        else:
            cutoff = min(math.ceil(a), math.ceil(b))
        for row in rows:
            assert row.defined == (row.n < cutoff)

    def test_divergence_vs_quadrature_tension(self):
        # The expansion loses its terms beyond n=4 while the integral itself
        # is perfectly finite.
        rows = naive_series_partial_sums(5.0, 7.0, 3.0, 8)
        assert not all(r.defined for r in rows)
        direct = ext_beta(5.0, 7.0, 3.0)
        assert math.isfinite(direct.value) and direct.value > 0
