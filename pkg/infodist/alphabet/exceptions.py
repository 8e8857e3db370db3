from __future__ import annotations

from infodist.exceptions import InfodistError


class AlphabetError(InfodistError, ValueError):
    """Base exception for alphabet and sequence construction errors."""


class DuplicateSymbol(AlphabetError):
    """An alphabet was given the same token twice."""

    def __init__(self, token: object):
        self.token = token
        super().__init__(f"duplicate symbol {token!r} in alphabet")


class TooSmall(AlphabetError):
    """An alphabet needs at least two symbols."""


class UnknownSymbol(AlphabetError):
    """A token does not belong to the alphabet."""

    def __init__(self, token: object, position: int):
        self.token = token
        self.position = position
        super().__init__(f"unknown symbol {token!r} at position {position}")


class AlphabetMismatch(AlphabetError):
    """Two sequences that must share an alphabet do not."""


class LengthMismatch(AlphabetError):
    """Two sequences that must have equal length do not."""

    def __init__(self, left: int, right: int):
        self.left = left
        self.right = right
        super().__init__(f"length mismatch: {left} != {right}")
