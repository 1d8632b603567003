"""Exception types shared by the engine and the command-line front end."""


class SeshadriError(Exception):
    """Base class for all errors raised by this package."""


class InputError(SeshadriError, ValueError):
    """A precondition on user-supplied data was violated (CLI exit code 2)."""


class InconsistencyError(SeshadriError):
    """Supplied data contradict each other, e.g. an oracle against ampleness (exit code 3)."""
