from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class DivergenceEstimate:
    """A directed divergence estimate D(z||x) in bits per symbol.

    `raw` is the unclamped estimator output; `value` equals it unless clamping
    replaced a negative raw value by 0, in which case `clamped` is set.
    """

    value: float
    raw: float
    clamped: bool
    method: str

    @classmethod
    def from_raw(cls, raw: float, method: str, clamp: bool = False) -> "DivergenceEstimate":
        if clamp and raw < 0:
            return cls(0.0, raw, True, method)
        return cls(raw, raw, False, method)

    def __float__(self) -> float:
        return self.value
