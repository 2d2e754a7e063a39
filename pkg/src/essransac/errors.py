class EssransacError(Exception):
    """Base class for errors raised by this package."""


class DegenerateError(EssransacError, ValueError):
    """Input geometry or data is too degenerate for the requested operation."""
