"""
Concatenation harness.

Codes concat(x, y) with one adaptive estimator and compares the rate per symbol
of x against H(X) + H(Y) (baseline) and H(X) + H(Y) + D(Y||X) (predicted). The
harness measures where the result falls between the two; it asserts nothing.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from infodist.alphabet import LengthMismatch, SymbolString, concat, require_same_alphabet
from infodist.divergence.cross_code import cross_code_divergence
from infodist.estimators import EstimatorLike, KTEstimator, resolve_estimator
from utils.logger import get_logger
from utils.observability import observe

logger = get_logger(__name__)


@dataclass(frozen=True)
class ReferenceRates:
    """Known rates for the pair, usually from the Markov oracle."""

    h_x: float
    h_y: float
    d_y_x: float


@dataclass(frozen=True)
class ConjectureReport:
    measured_rate: float
    predicted_rate: float
    baseline_rate: float
    li_estimate: float
    estimator_id: str
    from_reference: bool
    excess: float = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "excess", self.measured_rate - self.baseline_rate)


@observe
def concat_conjecture(
    x: SymbolString,
    y: SymbolString,
    estimator: Optional[EstimatorLike] = None,
    reference: Optional[ReferenceRates] = None,
) -> ConjectureReport:
    """Rates for the concatenation x + y of two equal-length strings.

    `li_estimate` is |b_{x+y}|/|x| - |b_y|/|y|, the quantity the concatenation
    approach really tracks (about H(X) + D(Y||X)).
    """
    require_same_alphabet(x, y)
    if len(x) != len(y):
        raise LengthMismatch(len(x), len(y))
    est = resolve_estimator(estimator)
    n = len(x)

    measured = est.codelength(concat(x, y)).total_bits / n
    y_rate = est.entropy(y)

    if reference is not None:
        h_x, h_y, d_y_x = reference.h_x, reference.h_y, reference.d_y_x
    else:
        order = est.order if isinstance(est, KTEstimator) else 0
        h_x, h_y = est.entropy(x), y_rate
        d_y_x = cross_code_divergence(y, x, order).value

    report = ConjectureReport(
        measured_rate=measured,
        predicted_rate=h_x + h_y + d_y_x,
        baseline_rate=h_x + h_y,
        li_estimate=measured - y_rate,
        estimator_id=est.estimator_id,
        from_reference=reference is not None,
    )
    logger.info(
        "conjecture_measured",
        estimator=report.estimator_id,
        measured=report.measured_rate,
        baseline=report.baseline_rate,
        excess=report.excess,
    )
    return report
