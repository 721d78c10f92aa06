"""Exception types shared across the package."""


class ValidationError(ValueError):
    """An input violates a structural invariant (shape, hermiticity, normalization)."""


class NotAStateError(ValidationError):
    """A matrix claimed to be a state has an eigenvalue below the tolerance floor."""


class UnsupportedDimensionError(ValidationError):
    """The operation is only implemented for the dimensions this package needs."""


class DomainError(ValueError):
    """A numeric argument lies outside its mathematical domain."""
