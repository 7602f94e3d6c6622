"""Built-in property suites: cross-engine agreement, representation closure,
identity residuals, and distribution checks over fixed parameter grids.

Each suite returns a list of CheckResult rows; the CLI formats them and
maps any failure to a nonzero exit code.  Tolerances default to the values
the package commits to, and can only be loosened or tightened globally per
run.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .distribution import ModifiedBetaDistribution
from .modified import (
    binomial_summation,
    bound_ratio,
    functional_relation_residual,
    modified_beta_quad,
    modified_beta_representation,
    modified_beta_series,
    shift_summation,
    symmetry_residual,
)
from .quadrature import QuadConfig, integrate_unit

__all__ = ["CheckResult", "SUITES", "run_suite", "run_suites", "ks_statistic"]

SHAPE_GRID = (0.5, 1.0, 2.0, 5.0, 10.0)
M_GRID = (-2.0335, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0335)
M_GRID_WIDE = M_GRID + (-10.0, 10.0)
REP_CASES = ((1.0, 1.0, 1.0), (2.0, 3.0, 1.5), (0.7, 2.5, -1.0), (5.0, 5.0, 2.0335))
DIST_SPECS = ((2.0, 3.0, 0.0), (2.0, 2.0, 1.5), (0.8, 5.0, -1.0))

# Asymptotic 1% Kolmogorov-Smirnov critical constant: D_crit = c / sqrt(n).
_KS_CRIT_1PCT = 1.62762


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    params: str
    residual: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.residual <= self.tol


def ks_statistic(samples: np.ndarray, cdf_values: np.ndarray) -> float:
    """Two-sided KS statistic from samples and their CDF values (sorted order)."""
    order = np.argsort(samples)
    c = cdf_values[order]
    n = len(c)
    hi = np.arange(1, n + 1) / n
    lo = np.arange(0, n) / n
    return float(np.max(np.maximum(c - lo, hi - c)))


def _shape_pairs():
    for a in SHAPE_GRID:
        for b in SHAPE_GRID:
            yield a, b


def suite_convergence(tol: float | None = None) -> list[CheckResult]:
    """Series vs quadrature relative discrepancy across the full m grid."""
    tol = 1e-9 if tol is None else tol
    cfg = QuadConfig(abs_tol=1e-15, rel_tol=1e-12)
    out = []
    for a, b in _shape_pairs():
        for m in M_GRID_WIDE:
            s, _ = modified_beta_series(a, b, m)
            q = modified_beta_quad(a, b, m, cfg)
            rel = abs(s.value - q.value) / abs(q.value)
            out.append(
                CheckResult("convergence", "engine-agreement",
                            f"alpha={a:g}, beta={b:g}, m={m:g}", rel, tol)
            )
    return out


def suite_representations(tol: float | None = None) -> list[CheckResult]:
    """All nine integral representations against the defining integral."""
    tol = 1e-8 if tol is None else tol
    out = []
    for a, b, m in REP_CASES:
        ref = modified_beta_quad(a, b, m).value
        for k in range(1, 10):
            v = modified_beta_representation(k, a, b, m).value
            out.append(
                CheckResult("representations", f"representation-{k}",
                            f"alpha={a:g}, beta={b:g}, m={m:g}", abs(v - ref), tol)
            )
    return out


def _adaptive_n_terms(alpha: float, beta: float, m: float, cap: int = 32) -> int:
    """Grow the truncation until the telescoped remainder is a small share
    of the target (the identities hold exactly at any truncation)."""
    n = 8
    while n < cap:
        check = shift_summation(alpha, beta, m, n)
        if check.remainder < 0.1 * abs(check.target):
            return n
        n *= 2
    return cap


def suite_identities(tol: float | None = None) -> list[CheckResult]:
    """Functional relation, symmetry and both summation identities."""
    tol = 1e-8 if tol is None else tol
    out = []
    for a, b in _shape_pairs():
        for m in M_GRID:
            params = f"alpha={a:g}, beta={b:g}, m={m:g}"
            out.append(CheckResult("identities", "functional-relation", params,
                                   functional_relation_residual(a, b, m), tol))
            out.append(CheckResult("identities", "symmetry", params,
                                   symmetry_residual(a, b, m), tol))
            n = _adaptive_n_terms(a, b, m)
            out.append(CheckResult("identities", "shift-summation", params,
                                   shift_summation(a, b, m, n).identity_residual, tol))
            if b < 1:
                out.append(CheckResult(
                    "identities", "binomial-summation", params,
                    binomial_summation(a, b, m, 24).identity_residual, tol))
    return out


def suite_distribution(tol: float | None = None) -> list[CheckResult]:
    """Normalization, classical reductions, MGF anchor, and seeded KS tests."""
    tol = 1e-9 if tol is None else tol
    out = []
    for p, q, m in DIST_SPECS:
        d = ModifiedBetaDistribution(p, q, m)
        params = f"p={p:g}, q={q:g}, m={m:g}"
        norm = integrate_unit(lambda t, tc: d.pdf(t)).value
        out.append(CheckResult("distribution", "pdf-normalization", params,
                               abs(norm - 1.0), tol))
        mgf0, _ = d.mgf(0.0)
        out.append(CheckResult("distribution", "mgf-at-zero", params,
                               abs(mgf0 - 1.0), 0.0))
        if m == 0.0:
            out.append(CheckResult("distribution", "classical-mean", params,
                                   abs(d.mean() - p / (p + q)), 1e-10))
            out.append(CheckResult(
                "distribution", "classical-variance", params,
                abs(d.variance() - p * q / ((p + q) ** 2 * (p + q + 1))), 1e-10))
        samples = d.sample(10_000, seed=20240711)
        stat = ks_statistic(samples, d.cdf_vec(samples))
        crit = _KS_CRIT_1PCT / math.sqrt(len(samples))
        out.append(CheckResult("distribution", "ks-inverse-cdf", params, stat, crit))
        band = 3.0 * math.sqrt(d.variance() / len(samples))
        out.append(CheckResult("distribution", "sample-mean-3sigma", params,
                               abs(float(samples.mean()) - d.mean()), band))
    # exp(m/4) envelope at the compatibility radius
    worst = max(bound_ratio(a, b, 2.0335) for a, b in _shape_pairs())
    out.append(CheckResult("distribution", "kernel-ratio-bound",
                           "m=2.0335, shape grid", worst, 1.6626 + 1e-4))
    return out


SUITES = {
    "convergence": suite_convergence,
    "representations": suite_representations,
    "identities": suite_identities,
    "distribution": suite_distribution,
}


def run_suite(name: str, tol: float | None = None) -> list[CheckResult]:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
    return SUITES[name](tol)


def run_suites(name: str, tol: float | None = None) -> list[CheckResult]:
    if name == "all":
        out = []
        for key in ("convergence", "representations", "identities", "distribution"):
            out.extend(SUITES[key](tol))
        return out
    return run_suite(name, tol)
