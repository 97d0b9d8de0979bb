class PosetError(Exception):
    """Base class for all errors raised by this package."""


class InputError(PosetError):
    """Malformed input: unknown element, cycle, bad literal, bad file."""


class CapacityError(PosetError):
    """A brute-force bound or draw budget was exceeded."""


class PreconditionError(PosetError):
    """The caller violated an operation's contract."""
