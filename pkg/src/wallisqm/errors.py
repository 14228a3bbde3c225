"""Shared exception types."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class DivergenceError(DomainError):
    """The requested quantity is a divergent integral (e.g. the Lorentz
    trial function has no finite ⟨r²⟩ at l = 0)."""


class ConvergenceError(RuntimeError):
    """Numerical refinement did not reach the requested tolerance.

    Carries the best available estimate so callers can still inspect it.
    """

    def __init__(self, message, best_estimate=None, error_estimate=None,
                 evaluations=0):
        super().__init__(message)
        self.best_estimate = best_estimate
        self.error_estimate = error_estimate
        self.evaluations = evaluations
