"""
Alphabets, symbol sequences and supersymbol pairing.

Every value here is immutable after construction. A symbol is stored as its
index in the alphabet's ordered token list; a supersymbol (a, b) over A x A is
stored as the pair-index a * |A| + b (x-major), and that layout is the only one
used anywhere in the package.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property, lru_cache
from typing import Hashable, Iterable, Sequence, Tuple

import numpy as np

from infodist.alphabet.exceptions import (
    AlphabetMismatch,
    DuplicateSymbol,
    LengthMismatch,
    TooSmall,
    UnknownSymbol,
)
from utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class Alphabet:
    """Ordered set of distinct tokens; a symbol's index is its list position."""

    symbols: Tuple[Hashable, ...]

    def __post_init__(self) -> None:
        if len(self.symbols) < 2:
            raise TooSmall(f"alphabet needs at least 2 symbols, got {len(self.symbols)}")
        seen: set = set()
        for token in self.symbols:
            if token in seen:
                raise DuplicateSymbol(token)
            seen.add(token)

    @property
    def size(self) -> int:
        return len(self.symbols)

    @cached_property
    def index(self) -> dict:
        return {token: i for i, token in enumerate(self.symbols)}

    def product(self) -> "Alphabet":
        """The product alphabet A x A, tokens are (a, b) tuples in pair-index order."""
        return _product_alphabet(self)

    def __repr__(self) -> str:
        preview = ", ".join(repr(s) for s in self.symbols[:8])
        more = ", ..." if self.size > 8 else ""
        return f"Alphabet(size={self.size}, symbols=[{preview}{more}])"


@lru_cache(maxsize=32)
def _product_alphabet(base: Alphabet) -> Alphabet:
    return Alphabet(tuple((a, b) for a in base.symbols for b in base.symbols))


BYTE_ALPHABET = Alphabet(tuple(range(256)))
DNA_ALPHABET = Alphabet(("A", "C", "G", "T"))


@dataclass(frozen=True)
class SymbolString:
    """A sequence of symbol indices over an alphabet."""

    alphabet: Alphabet
    data: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.data and (min(self.data) < 0 or max(self.data) >= self.alphabet.size):
            bad = next(i for i, s in enumerate(self.data) if not 0 <= s < self.alphabet.size)
            raise UnknownSymbol(self.data[bad], bad)

    @classmethod
    def from_codes(cls, alphabet: Alphabet, codes: np.ndarray | Sequence[int]) -> "SymbolString":
        return cls(alphabet, tuple(np.asarray(codes, dtype=np.int64).tolist()))

    def __len__(self) -> int:
        return len(self.data)

    @property
    def n(self) -> int:
        return len(self.data)

    @cached_property
    def codes(self) -> np.ndarray:
        """Read-only int64 view of the symbol indices."""
        arr = np.asarray(self.data, dtype=np.int64)
        arr.setflags(write=False)
        return arr

    def tokens(self) -> list:
        return [self.alphabet.symbols[i] for i in self.data]

    def __getitem__(self, item: slice) -> "SymbolString":
        if not isinstance(item, slice):
            raise TypeError("SymbolString supports slicing only; use .data for single symbols")
        return SymbolString(self.alphabet, self.data[item])

    def __repr__(self) -> str:
        return f"SymbolString(n={self.n}, alphabet_size={self.alphabet.size})"


class PairingPolicy(str, Enum):
    TRUNCATE = "truncate-to-min"
    STRICT = "strict"


@dataclass(frozen=True)
class SuperString:
    """A sequence of supersymbols over base_alphabet x base_alphabet."""

    base_alphabet: Alphabet
    data: Tuple[int, ...] = ()
    truncated: int = field(default=0, compare=False)

    def __post_init__(self) -> None:
        limit = self.base_alphabet.size ** 2
        if self.data and (min(self.data) < 0 or max(self.data) >= limit):
            bad = next(i for i, s in enumerate(self.data) if not 0 <= s < limit)
            raise UnknownSymbol(self.data[bad], bad)

    def __len__(self) -> int:
        return len(self.data)

    @property
    def product_alphabet(self) -> Alphabet:
        return self.base_alphabet.product()

    def to_symbol_string(self) -> SymbolString:
        """The same sequence viewed as a plain string over the product alphabet."""
        return SymbolString(self.product_alphabet, self.data)

    def project(self, axis: int) -> SymbolString:
        """Recover the first (axis=0) or second (axis=1) coordinate string."""
        size = self.base_alphabet.size
        codes = np.asarray(self.data, dtype=np.int64)
        part = codes // size if axis == 0 else codes % size
        return SymbolString.from_codes(self.base_alphabet, part)


def decode_pair(pair_index: int, size: int) -> Tuple[int, int]:
    return divmod(pair_index, size)


def make_alphabet(tokens: Iterable[Hashable]) -> Alphabet:
    return Alphabet(tuple(tokens))


def encode_string(raw: Iterable[Hashable], alphabet: Alphabet) -> SymbolString:
    """Map tokens to indices; the first token outside the alphabet raises UnknownSymbol."""
    index = alphabet.index
    data = []
    for position, token in enumerate(raw):
        code = index.get(token)
        if code is None:
            raise UnknownSymbol(token, position)
        data.append(code)
    return SymbolString(alphabet, tuple(data))


def require_same_alphabet(x: SymbolString, y: SymbolString) -> Alphabet:
    if x.alphabet != y.alphabet:
        raise AlphabetMismatch(f"alphabets differ: {x.alphabet!r} vs {y.alphabet!r}")
    return x.alphabet


def pair_supersymbols(x: SymbolString, y: SymbolString, policy: PairingPolicy = PairingPolicy.TRUNCATE) -> SuperString:
    """Pair x and y position by position into supersymbols x[t] * |A| + y[t]."""
    alphabet = require_same_alphabet(x, y)
    policy = PairingPolicy(policy)
    if policy is PairingPolicy.STRICT and len(x) != len(y):
        raise LengthMismatch(len(x), len(y))

    n = min(len(x), len(y))
    truncated = max(len(x), len(y)) - n
    if truncated:
        logger.info("pairing_truncated", kept=n, dropped=truncated)

    data = x.codes[:n] * alphabet.size + y.codes[:n]
    return SuperString(alphabet, tuple(data.tolist()), truncated=truncated)


def concat(x: SymbolString, y: SymbolString) -> SymbolString:
    alphabet = require_same_alphabet(x, y)
    return SymbolString(alphabet, x.data + y.data)
