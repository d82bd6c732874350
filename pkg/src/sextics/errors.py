"""Shared exception types."""


class InternalInvariantError(RuntimeError):
    """A computed quantity violated an invariant that valid data cannot
    violate (e.g. a point count above the Serre bound).  Signals a bug,
    never a property of the input."""


class DegenerateModel(ValueError):
    """A curve model failed its nondegeneracy precondition."""

    def __init__(self, reason, message=None):
        super().__init__(message or reason)
        self.reason = reason
