"""Entropy-rate estimates for pairs of strings built on supersymbols."""
from __future__ import annotations

from typing import Optional

from infodist.alphabet import PairingPolicy, SymbolString, pair_supersymbols
from infodist.estimators.base import CodelengthReport
from infodist.estimators.choice import EstimatorLike, resolve_estimator
from utils.logger import get_logger

logger = get_logger(__name__)


def entropy(z: SymbolString, estimator: Optional[EstimatorLike] = None) -> float:
    return resolve_estimator(estimator).entropy(z)


def joint_codelength(x: SymbolString, y: SymbolString, estimator: Optional[EstimatorLike] = None) -> CodelengthReport:
    pair = pair_supersymbols(x, y, PairingPolicy.TRUNCATE)
    return resolve_estimator(estimator).codelength(pair.to_symbol_string())


def joint_entropy(x: SymbolString, y: SymbolString, estimator: Optional[EstimatorLike] = None) -> float:
    """Estimator rate on the supersymbol string over A x A."""
    pair = pair_supersymbols(x, y, PairingPolicy.TRUNCATE)
    return resolve_estimator(estimator).entropy(pair.to_symbol_string())


def conditional_entropy_indirect(x: SymbolString, y: SymbolString, estimator: Optional[EstimatorLike] = None) -> float:
    """Joint rate minus the rate of y over the paired prefix. Not clamped, may be negative."""
    est = resolve_estimator(estimator)
    pair = pair_supersymbols(x, y, PairingPolicy.TRUNCATE)
    joint = est.entropy(pair.to_symbol_string())
    marginal = est.entropy(y[: len(pair)])
    value = joint - marginal
    if value < 0:
        logger.info("negative_conditional_estimate", estimator=est.estimator_id, value=value, length=len(pair))
    return value
