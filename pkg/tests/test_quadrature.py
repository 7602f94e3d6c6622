"""Tests for the tanh-sinh integration engine."""

import itertools
import math

import pytest

from betaext import (
    QuadConfig,
    integrate_half_line,
    integrate_real_line,
    integrate_unit,
)
from betaext.errors import (
    BudgetExceeded,
    NonIntegrableSingularity,
    SlowDecay,
)


def test_config_validation():
    with pytest.raises(ValueError):
        QuadConfig(abs_tol=0.0, rel_tol=0.0)
    with pytest.raises(ValueError):
        QuadConfig(abs_tol=-1.0)
    with pytest.raises(ValueError):
        QuadConfig(max_evals=10)
    QuadConfig(abs_tol=0.0, rel_tol=1e-10)  # one zero tolerance is fine


def test_constant_integrand():
    r = integrate_unit(lambda t, tc: 1.0)
    assert r.value == pytest.approx(1.0, abs=1e-15)
    assert r.abs_err_est < 1e-14
    assert r.method == "quad_unit"


def test_inverse_sqrt_singularity():
    r = integrate_unit(lambda t, tc: t ** -0.5, QuadConfig(abs_tol=1e-12))
    assert r.value == pytest.approx(2.0, abs=1e-12)


def test_beta_2_3_integrand():
    r = integrate_unit(lambda t, tc: t * tc ** 2)
    assert r.value == pytest.approx(1.0 / 12.0, rel=1e-13)


@pytest.mark.parametrize(
    "f,exact",
    [
        (lambda t, tc: t ** -0.7 * tc ** -0.7, math.gamma(0.3) ** 2 / math.gamma(0.6)),
        (lambda t, tc: t ** -0.75 * tc ** 9, math.gamma(0.25) * math.gamma(10) / math.gamma(10.25)),
        (lambda t, tc: math.log(t), -1.0),
    ],
    ids=["double-singular", "one-sided", "log-singular"],
)
def test_error_estimate_is_upper_bound(f, exact):
    r = integrate_unit(f)
    assert abs(r.value - exact) <= r.abs_err_est


def test_evals_within_budget():
    cfg = QuadConfig(max_evals=1000)
    r = integrate_unit(lambda t, tc: t * tc, cfg)
    assert r.evals <= cfg.max_evals


def test_linearity():
    f = lambda t, tc: t ** -0.25 * tc ** 1.5
    base = integrate_unit(f)
    for c in (-1.0, 2.0, 10.0):
        r = integrate_unit(lambda t, tc: c * f(t, tc))
        assert abs(r.value - c * base.value) <= (
            r.abs_err_est + abs(c) * base.abs_err_est + 1e-15
        )


def test_substitution_consistency():
    # The unit-interval beta form and its u = t/(1-t) transplant to (0, inf)
    # must agree within the combined error estimates.
    for a, b in itertools.product([0.3, 1.0, 2.5, 7.0], repeat=2):
        r1 = integrate_unit(lambda t, tc: t ** (a - 1) * tc ** (b - 1))
        r2 = integrate_half_line(
            lambda v: math.exp((a - 1) * math.log(v) - (a + b) * math.log1p(v))
        )
        assert abs(r1.value - r2.value) <= r1.abs_err_est + r2.abs_err_est + 1e-15


def test_highly_concentrated_kernel():
    # f = t(1-t) exp(-u t(1-t)) has all its mass within ~30/u of the
    # endpoints; expansion around each endpoint gives
    # 2/u^2 * (1 + 4/u + 36/u^2 + ...).
    for u in (1e6, 1e9, 1e12):
        r = integrate_unit(
            lambda t, tc: t * tc * math.exp(-u * t * tc),
            QuadConfig(abs_tol=0.0, rel_tol=1e-12),
        )
        exact = 2.0 / u ** 2 * (1.0 + 4.0 / u + 36.0 / u ** 2)
        assert r.value == pytest.approx(exact, rel=1e-9)


def test_complex_integrand():
    r = integrate_unit(lambda t, tc: complex(math.cos(t * tc), math.sin(t * tc)))
    assert isinstance(r.value, complex)
    # Frozen from a 30-digit mpmath evaluation of the same integrals.
    assert r.value.real == pytest.approx(0.9833993553876422, rel=1e-12)
    assert r.value.imag == pytest.approx(0.1654791928780078, rel=1e-10)


def test_half_line_exponential():
    r = integrate_half_line(lambda u: math.exp(-u))
    assert r.value == pytest.approx(1.0, rel=1e-12)


def test_half_line_beta_form():
    r = integrate_half_line(lambda u: (u / (1 + u)) * (1 / (1 + u)) ** 3)
    assert r.value == pytest.approx(1.0 / 6.0, rel=1e-12)


def test_half_line_gamma_value():
    r = integrate_half_line(lambda u: u ** 0.5 * math.exp(-u))
    assert r.value == pytest.approx(math.sqrt(math.pi) / 2.0, rel=1e-12)


def test_real_line_sech_squared():
    r = integrate_real_line(lambda x: 1.0 / math.cosh(x) ** 2)
    assert r.value == pytest.approx(2.0, rel=1e-12)


def test_real_line_gaussian():
    r = integrate_real_line(lambda x: math.exp(-x * x))
    assert r.value == pytest.approx(math.sqrt(math.pi), rel=1e-12)


def test_non_integrable_markers():
    with pytest.raises(NonIntegrableSingularity) as exc:
        integrate_unit(lambda t, tc: 1.0 / t)
    assert exc.value.endpoint == "lower"
    with pytest.raises(NonIntegrableSingularity) as exc:
        integrate_unit(lambda t, tc: tc ** -1.3)
    assert exc.value.endpoint == "upper"
    with pytest.raises(NonIntegrableSingularity):
        integrate_unit(lambda t, tc: 1.0 / (t * tc))


def test_budget_exceeded_carries_best_estimate():
    with pytest.raises(BudgetExceeded) as exc:
        integrate_unit(lambda t, tc: t ** -0.5, QuadConfig(max_evals=20))
    best = exc.value.best
    assert best is not None
    assert abs(best.value - 2.0) <= best.abs_err_est


def test_slow_decay():
    with pytest.raises(SlowDecay):
        integrate_half_line(lambda u: 1.0 / (1.0 + u))
    with pytest.raises(SlowDecay):
        integrate_real_line(lambda x: 1.0 / (1.0 + x * x))


def test_integrable_tail_is_not_slow_decay():
    r = integrate_half_line(lambda u: (1.0 + u) ** -1.5)
    assert r.value == pytest.approx(2.0, rel=1e-11)


def test_zero_integrand():
    r = integrate_unit(lambda t, tc: 0.0)
    assert r.value == 0.0
