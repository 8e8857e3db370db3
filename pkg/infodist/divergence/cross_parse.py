"""Cross-parsing of a target string against a reference and the cross-parse divergence estimate."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Tuple

from infodist.alphabet import SymbolString, require_same_alphabet
from infodist.divergence.estimate import DivergenceEstimate
from infodist.divergence.exceptions import EmptyReference
from infodist.divergence.suffix_automaton import SuffixAutomaton
from infodist.estimators import InputTooShort, lz78_parse
from utils.logger import get_logger
from utils.observability import observe

logger = get_logger(__name__)


@dataclass(frozen=True)
class CrossParse:
    """Phrases of z as (start, length) pairs; every phrase longer than one symbol occurs in x."""

    phrases: Tuple[Tuple[int, int], ...]
    input_length: int

    @property
    def cross_count(self) -> int:
        return len(self.phrases)


def cross_parse(z: SymbolString, x: SymbolString) -> CrossParse:
    """Greedy left-to-right parse of z into longest substrings of x.

    A symbol of z that never occurs in x becomes a one-symbol phrase.
    """
    require_same_alphabet(z, x)
    if len(x) == 0:
        raise EmptyReference("cannot cross-parse against an empty reference")

    automaton = SuffixAutomaton(x.data)
    phrases: List[Tuple[int, int]] = []
    start, target = 0, z.data
    while start < len(target):
        length = max(automaton.longest_prefix_match(target, start), 1)
        phrases.append((start, length))
        start += length
    return CrossParse(tuple(phrases), len(z))


@observe
def zm_divergence(z: SymbolString, x: SymbolString, clamp: bool = False) -> DivergenceEstimate:
    """[c(z|x) log2|z| - c(z) log2 c(z)] / |z|.

    The cross term tracks H(Z) + D(Z||X) and the self term tracks H(Z); the raw
    difference can be negative at finite length.
    """
    if len(z) < 2:
        raise InputTooShort("zm", len(z), 2)
    n = len(z)
    c_cross = cross_parse(z, x).cross_count
    c_self = lz78_parse(z).phrase_count
    self_bits = c_self * math.log2(c_self) if c_self > 1 else 0.0
    raw = (c_cross * math.log2(n) - self_bits) / n

    estimate = DivergenceEstimate.from_raw(raw, "zm", clamp)
    if estimate.clamped:
        logger.debug("divergence_clamped", method="zm", raw=raw)
    return estimate
