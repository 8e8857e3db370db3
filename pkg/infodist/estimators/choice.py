from __future__ import annotations

from enum import Enum
from typing import Optional, Union

from pydantic import BaseModel, Field, model_validator

from infodist.estimators.base import BaseEstimator
from infodist.estimators.external import ExternalCompressor, ExternalEstimator
from infodist.estimators.kt import KTEstimator
from infodist.estimators.lz78 import LZ78Estimator


class EstimatorKind(str, Enum):
    LZ78 = "lz78"
    KT = "kt"
    EXTERNAL = "external"


class EstimatorChoice(BaseModel):
    """Validated estimator selection; `build()` returns the estimator it names."""

    kind: EstimatorKind = EstimatorKind.KT
    order: int = Field(default=0, ge=0)
    adapter: Optional[ExternalCompressor] = None

    @model_validator(mode="after")
    def _adapter_matches_kind(self) -> "EstimatorChoice":
        if self.kind is EstimatorKind.EXTERNAL and self.adapter is None:
            raise ValueError("the external estimator needs an adapter")
        return self

    def build(self) -> BaseEstimator:
        if self.kind is EstimatorKind.LZ78:
            return LZ78Estimator()
        if self.kind is EstimatorKind.KT:
            return KTEstimator(self.order)
        return ExternalEstimator(self.adapter)

    @property
    def estimator_id(self) -> str:
        return self.build().estimator_id


EstimatorLike = Union[BaseEstimator, EstimatorChoice]


def resolve_estimator(estimator: Optional[EstimatorLike] = None) -> BaseEstimator:
    """Accept an estimator instance or a choice; None means kt(0)."""
    if estimator is None:
        return KTEstimator(0)
    if isinstance(estimator, EstimatorChoice):
        return estimator.build()
    return estimator
