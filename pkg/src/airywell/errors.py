"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain where a quantity is defined."""


class ConfigurationError(ValueError):
    """A solver or grid configuration is geometrically or numerically invalid."""


class ConvergenceError(RuntimeError):
    """An iterative search stopped without meeting its tolerance.

    ``partial`` carries whatever was found before the failure (the last valid
    bracket for a root refinement, the levels located so far for an
    eigenvalue search).
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class AiryOverflowError(OverflowError):
    """Bi or Bi' overflowed float64.

    ``component`` names the first component that overflowed and ``values``
    holds the saturated result (overflowing entries set to ``inf``).
    """

    def __init__(self, component, values):
        super().__init__(f"Airy {component} overflows float64")
        self.component = component
        self.values = values
