"""Exception types shared across the package."""


class ConsistencyError(RuntimeError):
    """An internal cross-check failed; indicates a bug, not bad input."""


class VerificationFailure(Exception):
    """A verification suite found a genuine mismatch."""
