"""
Exception types raised by the library.

Everything derives from ValueError so callers that only guard against bad
input keep working.
"""


class GaussHomotopyError(ValueError):
    """Base class for all library errors."""


class BadTokenError(GaussHomotopyError):
    """Input contains a character outside the letter alphabet."""


class NonGaussError(GaussHomotopyError):
    """Some letter does not occur exactly twice."""


class CapacityError(GaussHomotopyError):
    """The canonical alphabet has no unused letter left."""


class MissingLetterError(GaussHomotopyError):
    """The requested letter does not occur in the word."""


class IllegalMoveError(GaussHomotopyError):
    """A move does not match the phrase at its recorded site."""


class SpanError(GaussHomotopyError):
    """A span is out of range or crosses a component separator."""


class SplitLetterError(GaussHomotopyError):
    """The two occurrences of a letter lie in different components."""


class ArityError(GaussHomotopyError):
    """The operation needs a different number of components."""


class ConfigError(GaussHomotopyError):
    """Invalid search or runtime configuration."""
