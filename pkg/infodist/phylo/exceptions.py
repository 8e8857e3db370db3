from __future__ import annotations

from infodist.exceptions import InfodistError


class PhyloError(InfodistError):
    """Base exception for tree construction and tree/matrix formats."""


class AsymmetricMatrix(PhyloError, ValueError):
    def __init__(self, a: str, b: str, forward: float, backward: float):
        self.pair = (a, b)
        super().__init__(f"matrix is not symmetric: d({a},{b})={forward} but d({b},{a})={backward}")


class NewickParseError(PhyloError, ValueError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at offset {position}")


class PhylipFormatError(PhyloError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")
