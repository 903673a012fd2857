"""Exception types shared across the package."""


class ArgumentError(ValueError):
    """Arguments violate a documented precondition (shape, rank, or flag)."""


class PickRangeError(ArgumentError):
    """A pick value falls outside the coordinates it must select from."""


class RankError(ArgumentError):
    """A tensor has the wrong rank for the requested conversion."""


class ValidationError(ArgumentError):
    """A provision table holds entries outside its declared target shape."""


class CollisionError(RuntimeError):
    """Two sources hit the same target cell under the Error collision policy."""

    def __init__(self, target, message=None):
        self.target = tuple(int(c) for c in target)
        super().__init__(
            message or f"colliding writes at target index {self.target}"
        )


class FormatError(ValueError):
    """A JSON document does not match the documented schema."""
