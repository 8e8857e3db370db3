from __future__ import annotations

from infodist.exceptions import InfodistError


class SourceError(InfodistError, ValueError):
    """Base exception for Markov source construction and evaluation."""


class InvalidTransition(SourceError):
    """A transition table is not a valid stochastic matrix for the declared alphabet and order."""


class NotIrreducible(SourceError):
    """The state chain has no unique stationary distribution."""


class MarginalNotMarkov(SourceError):
    """The requested marginal of a joint source is not a finite-order Markov source."""


class SourceSpecError(SourceError):
    """A source specification file could not be parsed."""

    def __init__(self, message: str, line: int | None = None, path: str | None = None):
        self.line = line
        self.path = path
        where = f"{path or '<spec>'}:{line}: " if line is not None else (f"{path}: " if path else "")
        super().__init__(f"{where}{message}")
