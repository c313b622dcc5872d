"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input outside the mathematical domain (disc, origin, parameter ranges)."""


class AdmissibilityError(ValueError):
    """Curve leaves the disc, collapses toward the origin, or loses speed."""


class QuadratureError(RuntimeError):
    """Quadrature self-estimate exceeded the requested tolerance."""


class NumericalError(RuntimeError):
    """A finite-difference or linear-algebra step produced unusable output."""


class BracketingError(RuntimeError):
    """Root bracketing failed: the target value is not straddled."""


class ExhaustionError(RuntimeError):
    """Rejection sampling exceeded its retry budget."""


class ChartSingularityError(RuntimeError):
    """The x1-variation chart is degenerate at the requested parameter."""


class ProjectionError(RuntimeError):
    """Constraint projection is degenerate for the supplied variation basis."""


class IntegrationError(RuntimeError):
    """ODE integration failed its step-halving consistency check."""
