"""Exception types shared across the package."""


class BetaExtError(Exception):
    """Base class for all package-specific errors."""


class DomainError(BetaExtError, ValueError):
    """Arguments lie outside the mathematical domain of the operation."""


class PoleError(DomainError):
    """Evaluation requested exactly at a pole (gamma at a non-positive integer)."""


class LowerParamPole(DomainError):
    """A lower hypergeometric parameter is a non-positive integer."""


class DivergentSeries(BetaExtError, ArithmeticError):
    """The requested series lies outside its convergence domain."""


class ConvergenceRadiusError(DomainError):
    """|m| exceeds the 2.0335 bound enforced in strict-radius mode."""


class InvalidRepresentationIndex(BetaExtError, ValueError):
    """Integral-representation index outside 1..9."""


class QuadratureError(BetaExtError, ArithmeticError):
    """Base class for failures of the numerical integration engine."""


class NonIntegrableSingularity(QuadratureError):
    """An endpoint singularity with estimated exponent <= 0 (not integrable).

    Attributes:
        endpoint: 'lower' or 'upper'.
        exponent: estimated algebraic exponent a in f ~ x**(a-1) near the endpoint.
    """

    def __init__(self, endpoint: str, exponent: float):
        self.endpoint = endpoint
        self.exponent = exponent
        super().__init__(
            f"integrand is not integrable at the {endpoint} endpoint "
            f"(estimated exponent {exponent:.3g} <= 0)"
        )


class SlowDecay(QuadratureError):
    """A semi-infinite integrand decays too slowly for the tail to converge."""


class BudgetExceeded(QuadratureError):
    """Tolerance not reached within the evaluation budget.

    Carries the best available estimate in ``best`` (an EvalResult) and
    ``tail_failed`` (True when the node tail never converged, i.e. the
    integrand decays too slowly for the mesh rather than the budget simply
    being too small).
    """

    def __init__(self, message: str, best=None, tail_failed: bool = False):
        self.best = best
        self.tail_failed = tail_failed
        super().__init__(message)
