from __future__ import annotations

from infodist.exceptions import InfodistError


class EstimatorError(InfodistError):
    """Base exception for codelength estimators."""


class InputTooShort(EstimatorError, ValueError):
    """The input is shorter than the estimator's minimum length."""

    def __init__(self, estimator_id: str, length: int, minimum: int):
        self.estimator_id = estimator_id
        self.length = length
        self.minimum = minimum
        super().__init__(f"{estimator_id} needs at least {minimum} symbols, got {length}")


class AlphabetTooLarge(EstimatorError, ValueError):
    """The alphabet cannot be serialized for an external compressor."""


class AdapterFailure(EstimatorError, RuntimeError):
    """The external compressor exited non-zero, timed out, or produced no output."""
