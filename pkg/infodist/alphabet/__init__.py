from infodist.alphabet.core import (
    BYTE_ALPHABET,
    DNA_ALPHABET,
    Alphabet,
    PairingPolicy,
    SuperString,
    SymbolString,
    concat,
    decode_pair,
    encode_string,
    make_alphabet,
    pair_supersymbols,
    require_same_alphabet,
)
from infodist.alphabet.exceptions import (
    AlphabetError,
    AlphabetMismatch,
    DuplicateSymbol,
    LengthMismatch,
    TooSmall,
    UnknownSymbol,
)

__all__ = [
    "BYTE_ALPHABET",
    "DNA_ALPHABET",
    "Alphabet",
    "PairingPolicy",
    "SuperString",
    "SymbolString",
    "concat",
    "decode_pair",
    "encode_string",
    "make_alphabet",
    "pair_supersymbols",
    "require_same_alphabet",
    "AlphabetError",
    "AlphabetMismatch",
    "DuplicateSymbol",
    "LengthMismatch",
    "TooSmall",
    "UnknownSymbol",
]
