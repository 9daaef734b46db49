"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input lies outside the domain of the requested operation."""


class IntegrityError(RuntimeError):
    """A structural invariant failed (bad dataset, non-unique minimum, ...)."""


class DatasetUnavailable(LookupError):
    """No embedded dataset exists for the requested group."""
