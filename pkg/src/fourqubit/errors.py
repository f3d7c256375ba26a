"""Exception types shared across the package."""


class InconsistencyError(RuntimeError):
    """Two independent computations that must agree did not.

    Signals a bug or an unsupported input rather than a user error.
    """
