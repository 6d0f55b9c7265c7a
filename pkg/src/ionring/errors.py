"""Exception types shared across the package."""


class RingModelError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(RingModelError, ValueError):
    """An input is outside the domain of the requested computation."""


class SpeciesLookupError(RingModelError, LookupError):
    """A species label is not in the registry."""


class DegenerateGroundStateError(DomainError):
    """The ground state is a degenerate pair; the caller must pick a branch."""


class NumericalError(RingModelError, RuntimeError):
    """A numerical routine failed to converge."""
