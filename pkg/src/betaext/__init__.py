"""betaext: numerics for the Euler beta function and its exponential-kernel extensions."""

from .distribution import ModifiedBetaDistribution
from .errors import (
    BetaExtError,
    BudgetExceeded,
    ConvergenceRadiusError,
    DivergentSeries,
    DomainError,
    InvalidRepresentationIndex,
    LowerParamPole,
    NonIntegrableSingularity,
    PoleError,
    QuadratureError,
    SlowDecay,
)
from .extended import ext_beta, gen_ext_beta, naive_series_partial_sums
from .modified import (
    COMPAT_RADIUS,
    binomial_summation,
    bound_ratio,
    convergence_probe,
    derivative_relation,
    functional_relation_residual,
    mellin_relation,
    modified_beta_incomplete,
    modified_beta_quad,
    modified_beta_representation,
    modified_beta_series,
    shift_summation,
    split_real_imag,
    symmetry_residual,
)
from .quadrature import (
    DEFAULT_CONFIG,
    EvalResult,
    QuadConfig,
    integrate_half_line,
    integrate_real_line,
    integrate_unit,
)
from .special import (
    SeriesDiagnostics,
    beta_classical,
    beta_incomplete,
    gamma,
    hyp_1f1,
    hyp_pfq,
    log_gamma,
    pochhammer,
)

__version__ = "0.1.0"
