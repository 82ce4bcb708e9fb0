class AlgebraError(ValueError):
    """An input violates the mathematical precondition of an operation."""


class NotArtinianError(AlgebraError):
    pass


class NotOriginPrimaryError(AlgebraError):
    pass


class OutOfRangeError(AlgebraError):
    """The iteration index ``s`` is outside the range a formula is valid for."""
