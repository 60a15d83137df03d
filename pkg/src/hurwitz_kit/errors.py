"""Exception hierarchy shared by every module of the package."""


class HurwitzKitError(ValueError):
    """Base class; subclasses ``ValueError`` so callers can catch broadly."""


class PoleError(HurwitzKitError):
    """Argument sits on (or numerically indistinguishable from) a pole."""


class DomainError(HurwitzKitError):
    """Argument lies outside the documented domain of the function."""


class CapacityError(HurwitzKitError):
    """Request exceeds a precomputed table (e.g. Bernoulli index > 64)."""


class DivergenceError(HurwitzKitError):
    """The defining series does not converge at the requested point."""


class SingularError(HurwitzKitError):
    """Function is logarithmically singular at the point."""


class QuadratureEvaluationError(HurwitzKitError):
    """Integrand returned a non-finite value or raised at an abscissa."""

    def __init__(self, abscissa, detail):
        self.abscissa = abscissa
        super().__init__(f"integrand evaluation failed at x={abscissa!r}: {detail}")
