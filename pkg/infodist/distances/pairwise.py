"""Distances between two strings assembled from entropy and divergence estimates."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from infodist.alphabet import SymbolString, require_same_alphabet
from infodist.distances.exceptions import DegenerateDenominator
from infodist.distances.spec import ConditionalMode, DistanceSpec, DivergenceMethod, Metric
from infodist.divergence import DivergenceEstimate, cross_code_divergence, zm_divergence
from infodist.estimators import (
    EstimatorLike,
    conditional_entropy_direct,
    conditional_entropy_indirect,
    kt_entropy,
    resolve_estimator,
)

MIN_ENTROPY = 1e-3


@dataclass(frozen=True)
class PairDistance:
    value: float
    raw: float
    clamped: bool
    effective_n: int


def _effective_n(x: SymbolString, y: SymbolString) -> int:
    return min(len(x), len(y))


def e1_distance(x: SymbolString, y: SymbolString, k: int = 0) -> float:
    """n * max{h(x|y), h(y|x)} in bits, n = min(|x|, |y|)."""
    require_same_alphabet(x, y)
    n = _effective_n(x, y)
    return n * max(conditional_entropy_direct(x, y, k), conditional_entropy_direct(y, x, k))


def _normalize(numerator: float, denominator: float, min_entropy: float) -> float:
    if denominator < min_entropy:
        raise DegenerateDenominator(
            f"max entropy estimate {denominator:.3g} is below {min_entropy:.3g}; normalized distance undefined"
        )
    return numerator / denominator


def e2_distance(x: SymbolString, y: SymbolString, k: int = 0, min_entropy: float = MIN_ENTROPY) -> float:
    """max{h(x|y), h(y|x)} / max{h(x), h(y)}; values slightly above 1 are kept."""
    require_same_alphabet(x, y)
    n = _effective_n(x, y)
    numerator = max(conditional_entropy_direct(x, y, k), conditional_entropy_direct(y, x, k))
    denominator = max(kt_entropy(x[:n], k), kt_entropy(y[:n], k))
    return _normalize(numerator, denominator, min_entropy)


def _directed(z: SymbolString, x: SymbolString, method: DivergenceMethod, k: int, clamp: bool) -> DivergenceEstimate:
    if DivergenceMethod(method) is DivergenceMethod.ZM:
        return zm_divergence(z, x, clamp=clamp)
    return cross_code_divergence(z, x, k, clamp=clamp)


def kl_sym_distance(
    x: SymbolString,
    y: SymbolString,
    method: DivergenceMethod | str = DivergenceMethod.CROSS_CODE,
    variant: str = "max",
    k: int = 0,
    clamp: bool = True,
) -> float:
    """max (or sum) of D(x||y) and D(y||x); clamping applies per direction first."""
    if variant not in ("max", "sum"):
        raise ValueError(f"variant must be 'max' or 'sum', got {variant!r}")
    forward = _directed(x, y, method, k, clamp).value
    backward = _directed(y, x, method, k, clamp).value
    return max(forward, backward) if variant == "max" else forward + backward


def _indirect_numerator(x: SymbolString, y: SymbolString, estimator: EstimatorLike) -> float:
    return max(conditional_entropy_indirect(x, y, estimator), conditional_entropy_indirect(y, x, estimator))


def pair_distance(x: SymbolString, y: SymbolString, spec: DistanceSpec, estimator: Optional[EstimatorLike] = None) -> PairDistance:
    """One matrix cell under `spec`; negative raw values are clamped to 0 and flagged."""
    require_same_alphabet(x, y)
    n = _effective_n(x, y)
    k = spec.order

    if spec.metric.is_kl:
        variant = "max" if spec.metric is Metric.KL_SYM_MAX else "sum"
        raw = kl_sym_distance(x, y, spec.method, variant, k, spec.clamp)
    elif spec.conditional is ConditionalMode.DIRECT:
        raw = e1_distance(x, y, k) if spec.metric is Metric.E1 else e2_distance(x, y, k, spec.min_entropy)
    else:
        est = resolve_estimator(estimator or spec.estimator)
        numerator = _indirect_numerator(x, y, est)
        if spec.metric is Metric.E1:
            raw = n * numerator
        else:
            denominator = max(est.entropy(x[:n]), est.entropy(y[:n]))
            raw = _normalize(numerator, denominator, spec.min_entropy)

    return PairDistance(value=max(raw, 0.0), raw=raw, clamped=raw < 0, effective_n=n)
