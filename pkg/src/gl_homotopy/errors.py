"""
Exceptions raised by gl_homotopy.

Input errors also derive from :class:`ValueError` so callers that only
know the standard library can still catch them.
"""

__all__ = """
    GLHomotopyError
    ConfigError
    InvalidWeight
    WrongShape
    TypicalWeight
    InvalidBlockKey
    InvalidObject
    NoFlag
    UnsupportedShift
    UnsupportedHom
    CompositionMismatch
    UnknownBlock
    InvalidPartition
    TooManyRows
    InvalidSeries
    ParseError
    CheckFailed
""".split()


class GLHomotopyError(Exception):
    """Base class of every error raised by this package."""


class ConfigError(GLHomotopyError, ValueError):
    """The iconfig file is missing or malformed."""


class InvalidWeight(GLHomotopyError, ValueError):
    """A weight is not integral dominant or has the wrong number of rows."""


class WrongShape(GLHomotopyError, ValueError):
    """An operation needs GL(m|1) but got another n."""


class TypicalWeight(GLHomotopyError, ValueError):
    """A weight of atypicality zero was given where a block is needed."""


class InvalidBlockKey(GLHomotopyError, ValueError):
    """Core and base of a block key are inconsistent."""


class InvalidObject(GLHomotopyError, ValueError):
    """An interval module or homotopy object is malformed."""


class NoFlag(GLHomotopyError, ValueError):
    """The object has no Kac or anti-Kac flag (odd length)."""


class UnsupportedShift(GLHomotopyError, ValueError):
    """Shift of an even-length R interval (not determined)."""


class UnsupportedHom(GLHomotopyError, ValueError):
    """Hom space involving an even-length R interval (not determined)."""


class CompositionMismatch(GLHomotopyError, ValueError):
    """Target of the first morphism is not the source of the second."""


class UnknownBlock(GLHomotopyError, ValueError):
    """Series labels cannot be placed in a block."""


class InvalidPartition(GLHomotopyError, ValueError):
    """A partition is not a weakly decreasing list of positive integers."""


class TooManyRows(GLHomotopyError, ValueError):
    """The partition has more rows than the rank of GL(n)."""


class InvalidSeries(GLHomotopyError, ValueError):
    """Series variants or blocks do not match."""


class ParseError(GLHomotopyError, ValueError):
    """Textual or JSON input could not be parsed."""


class CheckFailed(GLHomotopyError):
    """An acceptance criterion did not hold."""
