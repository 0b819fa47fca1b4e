"""Exception types shared across the package."""


class InputError(ValueError):
    """A caller-supplied value violates a documented precondition."""


class InstanceFormatError(InputError):
    """A serialized file is malformed; the message names the offending field."""


class GuardExceeded(RuntimeError):
    """An exhaustive search was asked to run beyond its size guard."""
