"""Exception hierarchy shared by all modules.

InputError covers everything a caller can fix (bad dimensions, malformed
JSON, parameters outside the supported range).  InternalError marks a
violated internal invariant; the CLI maps the former to exit code 1 and
the latter to exit code 2.
"""


class LogPairError(Exception):
    pass


class InputError(LogPairError):
    """The caller supplied something we cannot work with."""


class NotDecomposableError(InputError):
    """No decomposition exists over the given candidate set."""


class NoPencilError(InputError):
    """The residual adjoint class is not a multiple of a square-zero class."""


class InternalError(LogPairError):
    """An internal consistency check failed."""
