"""Codelength estimator contract shared by every compressor-like estimator."""
from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass, field

from infodist.alphabet import SymbolString
from infodist.estimators.exceptions import InputTooShort


@dataclass(frozen=True)
class CodelengthReport:
    """Total codelength of one input and its per-symbol rate (the |b_x| / |x| family)."""

    total_bits: float
    input_length: int
    estimator_id: str
    rate: float = field(init=False)

    def __post_init__(self) -> None:
        if self.total_bits < 0:
            raise ValueError(f"codelength must be >= 0, got {self.total_bits}")
        rate = self.total_bits / self.input_length if self.input_length > 0 else 0.0
        object.__setattr__(self, "rate", rate)


class BaseEstimator(ABC):
    """Maps a symbol string to a codelength; its rate estimates the entropy rate of the source."""

    min_length: int = 1

    @property
    @abstractmethod
    def estimator_id(self) -> str:
        """Stable tag carried by every report this estimator produces."""
        raise NotImplementedError

    @abstractmethod
    def codelength(self, z: SymbolString) -> CodelengthReport:
        """Total codelength in bits of z."""
        raise NotImplementedError

    def entropy(self, z: SymbolString) -> float:
        """Per-symbol codelength; raises InputTooShort below `min_length`."""
        if len(z) < self.min_length:
            raise InputTooShort(self.estimator_id, len(z), self.min_length)
        return self.codelength(z).rate

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.estimator_id})"
