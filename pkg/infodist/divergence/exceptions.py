from __future__ import annotations

from infodist.exceptions import InfodistError


class DivergenceError(InfodistError):
    """Base exception for divergence estimation."""


class EmptyReference(DivergenceError, ValueError):
    """The reference string a target is parsed or coded against is empty."""
