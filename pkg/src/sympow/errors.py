"""Exceptions shared across the package."""


class InputError(ValueError):
    """A file or argument failed validation before any computation ran."""


class SizeGuardExceeded(RuntimeError):
    """A computation was aborted because a configurable size guard tripped.

    Raised instead of exhausting memory or time on inputs outside the
    intended desk scale.  The guard that tripped is named in the message.
    """
