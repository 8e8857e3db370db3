from __future__ import annotations

from infodist.exceptions import InfodistError


class DistanceError(InfodistError):
    """Base exception for distance computation."""


class DegenerateDenominator(DistanceError, ArithmeticError):
    """Both strings estimate to (almost) zero entropy, so the normalized distance is 0/0."""


class TooFewItems(DistanceError, ValueError):
    def __init__(self, needed: int, got: int):
        self.needed = needed
        self.got = got
        super().__init__(f"need at least {needed} items, got {got}")


class DuplicateLabel(DistanceError, ValueError):
    """Two corpus items share a label."""
