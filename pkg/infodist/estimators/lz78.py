"""LZ78 incremental parsing and the phrase-count entropy estimate."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, Tuple

from infodist.alphabet import SymbolString
from infodist.estimators.base import BaseEstimator, CodelengthReport
from utils.observability import observe


@dataclass(frozen=True)
class PhraseParse:
    """Phrase boundaries as (start, length) pairs tiling the parsed input."""

    phrases: Tuple[Tuple[int, int], ...]
    input_length: int

    @property
    def phrase_count(self) -> int:
        return len(self.phrases)

    def split(self, z: SymbolString) -> List[Tuple[int, ...]]:
        return [z.data[start:start + length] for start, length in self.phrases]


def lz78_parse(z: SymbolString) -> PhraseParse:
    """Each phrase is the shortest prefix of the remaining input not yet in the dictionary.

    The dictionary is a trie flattened into a dict keyed by (node, symbol); node 0 is
    the empty phrase. The final phrase may repeat an existing entry.
    """
    trie: Dict[Tuple[int, int], int] = {}
    phrases: List[Tuple[int, int]] = []
    node, start, next_node = 0, 0, 1

    for t, symbol in enumerate(z.data):
        child = trie.get((node, symbol))
        if child is None:
            trie[(node, symbol)] = next_node
            next_node += 1
            phrases.append((start, t - start + 1))
            node, start = 0, t + 1
        else:
            node = child

    if start < len(z):
        phrases.append((start, len(z) - start))
    return PhraseParse(tuple(phrases), len(z))


def _phrase_bits(c: int) -> float:
    return c * math.log2(c) if c > 1 else 0.0


class LZ78Estimator(BaseEstimator):
    """c * log2(c) bits for c phrases."""

    min_length = 2

    @property
    def estimator_id(self) -> str:
        return "lz78"

    @observe(estimator=True)
    def codelength(self, z: SymbolString) -> CodelengthReport:
        parse = lz78_parse(z)
        return CodelengthReport(_phrase_bits(parse.phrase_count), len(z), self.estimator_id)


def lz78_entropy(z: SymbolString) -> float:
    """c * log2(c) / |z|; raises InputTooShort below two symbols."""
    return LZ78Estimator().entropy(z)
