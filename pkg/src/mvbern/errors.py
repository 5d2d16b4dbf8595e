"""Exception hierarchy shared by every module."""


class MBDError(ValueError):
    """Base class for all errors raised by :mod:`mvbern`."""


class DomainError(MBDError):
    """An argument lies outside the domain of an operation."""


class ValidationError(MBDError):
    """A value violates the invariants of a probability table or lattice."""

    def __init__(self, message, indices=()):
        super().__init__(message)
        self.indices = tuple(indices)


class IncompatibilityError(ValidationError):
    """Parameters admit no joint distribution (Frechet-class compatibility failure)."""


class DataFormatError(ValidationError):
    """A data or model file could not be parsed."""
