from __future__ import annotations

from infodist.alphabet import SymbolString, require_same_alphabet
from infodist.divergence.estimate import DivergenceEstimate
from infodist.divergence.exceptions import EmptyReference
from infodist.estimators import InputTooShort, kt_entropy, kt_frozen_codelength
from utils.logger import get_logger
from utils.observability import observe

logger = get_logger(__name__)


@observe
def cross_code_divergence(z: SymbolString, x: SymbolString, k: int = 0, clamp: bool = False) -> DivergenceEstimate:
    """Rate of z under KT counts frozen on x, minus the adaptive KT rate of z.

    The frozen rate approaches H(Z) + D(Z||X), the adaptive one H(Z).
    """
    require_same_alphabet(z, x)
    if len(x) == 0:
        raise EmptyReference("cannot train a frozen model on an empty reference")
    if len(z) == 0:
        raise InputTooShort("cross-code", 0, 1)

    frozen_rate = kt_frozen_codelength(z, x, k).rate
    raw = frozen_rate - kt_entropy(z, k)
    estimate = DivergenceEstimate.from_raw(raw, "cross-code", clamp)
    if estimate.clamped:
        logger.debug("divergence_clamped", method="cross-code", raw=raw)
    return estimate
