from infodist.estimators.base import BaseEstimator, CodelengthReport
from infodist.estimators.choice import EstimatorChoice, EstimatorKind, EstimatorLike, resolve_estimator
from infodist.estimators.exceptions import AdapterFailure, AlphabetTooLarge, EstimatorError, InputTooShort
from infodist.estimators.external import (
    ExternalCompressor,
    ExternalEstimator,
    adapter_from_command,
    external_entropy,
    serialize,
)
from infodist.estimators.joint import conditional_entropy_indirect, entropy, joint_codelength, joint_entropy
from infodist.estimators.kt import (
    FrozenKTModel,
    KTEstimator,
    conditional_entropy_direct,
    kt_codelength,
    kt_conditional_codelength,
    kt_entropy,
    kt_frozen_codelength,
)
from infodist.estimators.lz78 import LZ78Estimator, PhraseParse, lz78_entropy, lz78_parse

__all__ = [
    "BaseEstimator",
    "CodelengthReport",
    "EstimatorChoice",
    "EstimatorKind",
    "EstimatorLike",
    "resolve_estimator",
    "AdapterFailure",
    "AlphabetTooLarge",
    "EstimatorError",
    "InputTooShort",
    "ExternalCompressor",
    "ExternalEstimator",
    "adapter_from_command",
    "external_entropy",
    "serialize",
    "conditional_entropy_indirect",
    "entropy",
    "joint_codelength",
    "joint_entropy",
    "FrozenKTModel",
    "KTEstimator",
    "conditional_entropy_direct",
    "kt_codelength",
    "kt_conditional_codelength",
    "kt_entropy",
    "kt_frozen_codelength",
    "LZ78Estimator",
    "PhraseParse",
    "lz78_entropy",
    "lz78_parse",
]
