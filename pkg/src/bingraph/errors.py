"""Exception hierarchy.

The CLI maps :class:`InputError` to exit status 2 and every other
:class:`BinGraphError` to exit status 1.
"""

from __future__ import annotations


class BinGraphError(Exception):
    pass


class InputError(BinGraphError, ValueError):
    """Malformed input: bad node index, bad word, bad document."""


class ParseError(InputError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class PreconditionError(BinGraphError):
    """An operation was called on a structure it is not defined for."""


class NoPathError(BinGraphError):
    pass


class NotConnectedError(BinGraphError):
    pass


class AmbiguousRootError(BinGraphError):
    def __init__(self, maxima):
        self.maxima = tuple(maxima)
        super().__init__(f"several maximum nodes: {list(self.maxima)}")


class SizeLimitError(BinGraphError):
    pass
