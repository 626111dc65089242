"""Exception hierarchy shared by every module.

Two families matter to callers: `DomainError` is "your input is outside the
supported parameter space" (bad probability, unknown copula family, ...),
while `InfeasibleError` is "the inputs are individually valid but no model
satisfies them" (correlation outside its Frechet bounds, null effect, a crude
incidence no marginal scale can reach). The HTTP layer maps the first to 400
and the second to 422.
"""


class DesignError(ValueError):
    """Base class; `field` optionally names the offending argument."""

    def __init__(self, message, field=None):
        super().__init__(message)
        self.field = field


class DomainError(DesignError):
    """Argument outside its mathematical domain."""


class InfeasibleError(DesignError):
    """Valid-looking inputs that admit no solution."""


class BracketingError(DomainError):
    """Root bracket does not straddle a sign change."""


class IntegrationError(DomainError):
    """Integrand evaluated to a non-finite value."""


class CalibrationError(InfeasibleError):
    """No marginal scale reproduces the requested incidence."""


class MedianUndefinedError(InfeasibleError):
    """Composite survival never falls below one half within the search horizon."""
