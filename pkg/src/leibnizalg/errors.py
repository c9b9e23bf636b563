"""Error types shared across the package."""


class InputError(ValueError):
    """Caller supplied arguments outside an operation's contract."""


class DomainError(ValueError):
    """Arguments are well-formed but outside the mathematical domain."""


class CheckFailure(Exception):
    """A verification that the package asserts to hold did not hold."""


class InternalInvariantError(RuntimeError):
    """An internal re-verification failed; indicates a bug, never ignored."""
