"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain where the formula is defined."""


class IllConditioned(ValueError):
    """Parameters are too close together for the partial-fraction coefficients."""


class Unsupported(ValueError):
    """No closed form is available for the requested case."""


class NonConvergence(RuntimeError):
    """An iterative solver exhausted its iteration budget."""
