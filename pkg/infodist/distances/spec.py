from __future__ import annotations

from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field, model_validator

from infodist.estimators import EstimatorChoice, EstimatorKind


class Metric(str, Enum):
    E1 = "e1"
    E2 = "e2"
    KL_SYM_MAX = "kl-sym-max"
    KL_SYM_SUM = "kl-sym-sum"

    @property
    def is_kl(self) -> bool:
        return self in (Metric.KL_SYM_MAX, Metric.KL_SYM_SUM)


class DivergenceMethod(str, Enum):
    ZM = "zm"
    CROSS_CODE = "cross-code"


class ConditionalMode(str, Enum):
    DIRECT = "direct"
    INDIRECT = "indirect"


class DistanceSpec(BaseModel):
    """Which distance to compute and with which estimator.

    e1/e2 numerators use the direct side-information coder (KT, `estimator.order`)
    unless `conditional` is indirect, in which case any estimator works. KL metrics
    need a divergence method.
    """

    metric: Metric = Metric.E2
    estimator: EstimatorChoice = Field(default_factory=EstimatorChoice)
    method: Optional[DivergenceMethod] = None
    conditional: ConditionalMode = ConditionalMode.DIRECT
    clamp: bool = True
    min_entropy: float = Field(default=1e-3, ge=0.0)

    @model_validator(mode="after")
    def _check_combination(self) -> "DistanceSpec":
        if self.metric.is_kl:
            if self.method is None:
                raise ValueError(f"{self.metric.value} needs a divergence method (zm or cross-code)")
        elif self.conditional is ConditionalMode.DIRECT and self.estimator.kind is not EstimatorKind.KT:
            raise ValueError("direct conditional coding is only available for the kt estimator")
        return self

    @property
    def order(self) -> int:
        return self.estimator.order

    def describe(self) -> str:
        parts = [self.metric.value, self.estimator.estimator_id]
        if self.metric.is_kl:
            parts.append(self.method.value)
        else:
            parts.append(self.conditional.value)
        return " ".join(parts)
