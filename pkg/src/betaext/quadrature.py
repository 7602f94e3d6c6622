"""Double-exponential (tanh-sinh) quadrature on (0, 1), with changes of
variable for (0, inf) and the whole real line.

The node transform x(t) = (1 + tanh((pi/2) sinh t)) / 2 clusters abscissae
double-exponentially at both endpoints, so integrable algebraic endpoint
singularities t**(a-1), (1-t)**(b-1) with a, b > 0 need no special casing.

Integrand protocol on the unit interval: the callable receives *two*
arguments ``f(t, tc)`` with ``tc == 1 - t`` computed without cancellation.
Near the right endpoint ``1 - t`` rounds to 0 in plain float arithmetic
long before the node weights become negligible, which would destroy
endpoint-singular factors like ``tc**(b-1)``; passing the exact distance
sidesteps that.  Integrands on (0, inf) and (-inf, inf) take a single
argument.

All functions are pure; the node tables below are built once at import and
never mutated, so concurrent use from multiple threads is safe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import BudgetExceeded, NonIntegrableSingularity, SlowDecay

__all__ = [
    "QuadConfig",
    "EvalResult",
    "integrate_unit",
    "integrate_half_line",
    "integrate_real_line",
]

UnitIntegrand = Callable[[float, float], "float | complex"]
LineIntegrand = Callable[[float], "float | complex"]

# Beyond |t| = 6 the node distance exp(-pi*sinh t) drops under 3e-276 and
# exponents of beta-type integrands would start to overflow double range.
_T_MAX = 6.0
_MAX_LEVEL = 10
# Start convergence checks here: two coarse levels agreeing is not evidence.
_MIN_LEVEL = 2
_EPS = 2.220446049250313e-16


@dataclass(frozen=True)
class QuadConfig:
    """Tolerance and budget settings for one integration call.

    abs_tol / rel_tol: the run succeeds once the error estimate is below
    max(abs_tol, rel_tol * |value|); they must not both be zero.
    max_evals: hard cap on integrand evaluations.
    level_cap: maximum mesh-refinement depth (each level halves the step).
    """

    abs_tol: float = 1e-12
    rel_tol: float = 1e-12
    max_evals: int = 200_000
    level_cap: int = _MAX_LEVEL

    def __post_init__(self):
        if self.abs_tol < 0 or self.rel_tol < 0:
            raise ValueError("tolerances must be non-negative")
        if self.abs_tol == 0 and self.rel_tol == 0:
            raise ValueError("abs_tol and rel_tol must not both be zero")
        if self.max_evals < 15:
            raise ValueError("max_evals must be at least 15")
        if self.level_cap < 1:
            raise ValueError("level_cap must be positive")


DEFAULT_CONFIG = QuadConfig()


@dataclass(frozen=True)
class EvalResult:
    """A computed value with its error estimate and work counters."""

    value: "float | complex"
    abs_err_est: float
    evals: int
    method: str

    def __post_init__(self):
        if not math.isfinite(self.abs_err_est) or self.abs_err_est < 0:
            raise ValueError("abs_err_est must be finite and non-negative")


def _build_levels() -> tuple:
    """Precompute (delta, 1-delta, weight) node triples per refinement level.

    Level 0 holds t = 0, 1, ..., T_MAX; level k > 0 holds the odd multiples
    of 2**-k.  For a node at parameter t > 0 the pair of abscissae is
    (delta, 1-delta) by symmetry, so one triple serves both sides.
    """
    half_pi = math.pi / 2.0
    levels = []
    for level in range(_MAX_LEVEL + 1):
        h = 0.5 ** level
        if level == 0:
            ts = [k * 1.0 for k in range(0, int(_T_MAX) + 1)]
        else:
            ts = [j * h for j in range(1, int(_T_MAX / h) + 1, 2)]
        nodes = []
        for t in ts:
            u = half_pi * math.sinh(t)
            q = math.exp(-2.0 * u)
            d = q / (1.0 + q)          # distance of the -t node from 0
            dc = 1.0 / (1.0 + q)       # its complement, exactly 1 - d
            w = math.pi * math.cosh(t) * q / ((1.0 + q) ** 2)
            if w == 0.0 or d == 0.0:
                break                  # underflowed; deeper t contributes nothing
            nodes.append((d, dc, w))
        levels.append(tuple(nodes))
    return tuple(levels)


_LEVELS = _build_levels()


def _endpoint_exponent(f: UnitIntegrand, upper: bool) -> float:
    """Estimate a in f ~ dist**(a-1) near an endpoint from three probes."""
    probes = (1e-5, 1e-8, 1e-11)
    logs = []
    for d in probes:
        try:
            v = f(1.0 - d, d) if upper else f(d, 1.0 - d)
        except (OverflowError, ValueError, ZeroDivisionError):
            return float("-inf")
        av = abs(v)
        if av == 0.0:
            return float("inf")  # integrand vanishes: no singularity here
        if not math.isfinite(av):
            return float("-inf")
        logs.append(math.log(av))
    # Slope of log|f| against log(dist) between the two extreme probes.
    slope = (logs[2] - logs[0]) / (math.log(probes[2]) - math.log(probes[0]))
    return 1.0 + slope


def integrate_unit(f: UnitIntegrand, cfg: QuadConfig | None = None) -> EvalResult:
    """Integrate ``f`` over the open interval (0, 1).

    Parameters
    ----------
    f : callable
        Evaluated as ``f(t, 1 - t)``; may diverge integrably at either
        endpoint with algebraic rates t**(a-1), (1-t)**(b-1), a, b > 0.
    cfg : QuadConfig, optional
        Tolerances and budget; defaults to ``DEFAULT_CONFIG``.

    Returns
    -------
    EvalResult with ``abs_err_est <= max(abs_tol, rel_tol * |value|)``.

    Raises
    ------
    NonIntegrableSingularity
        If tail refinement stalls and the endpoint exponent estimate is <= 0.
    BudgetExceeded
        If the budget or level cap is hit first; carries the best estimate.
    """
    if cfg is None:
        cfg = DEFAULT_CONFIG

    level_cap = min(cfg.level_cap, _MAX_LEVEL)
    evals = 0
    value = 0.0
    prev_value = None
    diff = math.inf
    tail_extra = 0.0
    scale = 0.0  # magnitude estimate used for relative targets and cutoffs.
    pending = None  # first result meeting the target; one bonus level sharpens it.

    for level in range(level_cap + 1):
        h = 0.5 ** level
        nodes = _LEVELS[level]
        cut = 0.005 * max(cfg.abs_tol, cfg.rel_tol * scale)
        new_sum = 0.0
        tail_extra = 0.0
        below_cut = 0
        tail_ok = False
        start = 0

        if level == 0:
            d, dc, w = nodes[0]
            new_sum = w * f(0.5, 0.5)
            evals += 1
            start = 1

        last_mag = 0.0
        seen_significant = False
        try:
            for d, dc, w in nodes[start:]:
                if evals + 2 > cfg.max_evals:
                    if pending is not None:
                        return pending
                    best = _result(value, diff, tail_extra, evals, scale)
                    raise BudgetExceeded(
                        f"max_evals={cfg.max_evals} reached before tolerance", best=best
                    )
                lo = f(d, dc)
                hi = f(dc, d)
                evals += 2
                contrib = w * (lo + hi)
                new_sum += contrib
                last_mag = h * abs(contrib)
                if not math.isfinite(abs(new_sum)):
                    _diagnose_endpoints(f)
                    best = _result(value, math.inf if prev_value is None else diff,
                                   0.0, evals, scale)
                    raise BudgetExceeded("integrand produced a non-finite sum",
                                         best=best)
                # Only let the tail cutoff bite after this level has seen a
                # live contribution: integrands concentrated at the endpoints
                # start with near-zero central nodes and grow outward first.
                if last_mag <= cut:
                    if seen_significant:
                        below_cut += 1
                        if below_cut >= 2:
                            tail_ok = True
                            break
                else:
                    seen_significant = True
                    below_cut = 0
        except (OverflowError, ZeroDivisionError) as exc:
            # The integrand blew up at a node the tail cutoff never reached:
            # almost always an endpoint singularity too strong to integrate.
            _diagnose_endpoints(f)
            best = _result(value, diff, tail_extra, evals, scale)
            raise BudgetExceeded(
                f"integrand raised {type(exc).__name__} during refinement",
                best=best,
                tail_failed=True,
            ) from exc

        if not tail_ok and last_mag <= cut:
            # Reached the table end with a dead tail but never saw anything
            # above the cutoff this level: nothing stalled, the mass (if any)
            # just sits between the current nodes.
            tail_ok = True
        if not tail_ok:
            # Scan reached the end of the node table with live contributions:
            # either a non-integrable endpoint or decay too slow for the mesh.
            _diagnose_endpoints(f)
            tail_extra = 20.0 * last_mag

        value = value / 2.0 + h * new_sum if level > 0 else new_sum
        scale = max(scale, abs(value))

        if prev_value is not None:
            diff = abs(value - prev_value)
        prev_value = value

        if level >= _MIN_LEVEL:
            err_est = 10.0 * diff + tail_extra + 8.0 * _EPS * scale
            target = max(cfg.abs_tol, cfg.rel_tol * abs(value))
            if err_est <= target or (diff == 0.0 and tail_extra == 0.0):
                result = EvalResult(value, err_est, evals, "quad_unit")
                if pending is not None or err_est <= 0.02 * target or level == level_cap:
                    return result
                pending = result  # refine once more for a sharper estimate
            elif pending is not None:
                return pending

    if pending is not None:
        return pending
    best = _result(value, diff, tail_extra, evals, scale)
    raise BudgetExceeded(
        f"tolerance not reached within level cap {level_cap}",
        best=best,
        tail_failed=tail_extra > 0.0,
    )


def _result(value, diff, tail_extra, evals, scale) -> EvalResult:
    if math.isfinite(diff):
        err = 10.0 * diff + tail_extra
    else:
        err = abs(value) + tail_extra  # no refinement information yet
    err += 8.0 * _EPS * scale
    if not math.isfinite(err):
        err = abs(value) if math.isfinite(abs(value)) else 0.0
    return EvalResult(value, err, evals, "quad_unit")


def _diagnose_endpoints(f: UnitIntegrand) -> None:
    """Raise NonIntegrableSingularity if either endpoint exponent is <= 0.

    The probe threshold allows for the O(1e-5) bias the regular factor at
    the opposite endpoint contributes to the slope fit.
    """
    for upper in (False, True):
        a = _endpoint_exponent(f, upper)
        if a <= 1e-5:
            raise NonIntegrableSingularity("upper" if upper else "lower", a)


def integrate_half_line(f: LineIntegrand, cfg: QuadConfig | None = None) -> EvalResult:
    """Integrate ``f`` over (0, inf) via the substitution u = t/(1-t).

    ``f`` may have an integrable algebraic singularity at 0 and must decay
    fast enough that u**2 * f(u) -> 0; otherwise SlowDecay is raised.
    """

    def g(t: float, tc: float):
        u = t / tc
        # Two divisions: tc*tc underflows for the deepest nodes while 1/tc stays finite.
        return (f(u) / tc) / tc

    try:
        return integrate_unit(g, cfg)
    except NonIntegrableSingularity as exc:
        if exc.endpoint == "upper":
            raise SlowDecay(
                "integrand tail decays too slowly on (0, inf) "
                f"(estimated u**(-s) with s <= 1; exponent {exc.exponent:.3g})"
            ) from exc
        raise
    except BudgetExceeded as exc:
        if exc.tail_failed:
            raise SlowDecay(
                "integrand tail on (0, inf) failed the tail test within the budget"
            ) from exc
        raise


def integrate_real_line(f: LineIntegrand, cfg: QuadConfig | None = None) -> EvalResult:
    """Integrate ``f`` over (-inf, inf) via x = log(t/(1-t)).

    Requires at least exponential decay of ``f`` at both infinities.
    """

    def g(t: float, tc: float):
        x = math.log(t / tc)
        return f(x) / (t * tc)

    try:
        return integrate_unit(g, cfg)
    except NonIntegrableSingularity as exc:
        side = "+inf" if exc.endpoint == "upper" else "-inf"
        raise SlowDecay(
            f"integrand decays too slowly towards {side} "
            f"(estimated exponent {exc.exponent:.3g})"
        ) from exc
    except BudgetExceeded as exc:
        if exc.tail_failed:
            raise SlowDecay(
                "integrand failed the tail test towards an infinity within the budget"
            ) from exc
        raise
