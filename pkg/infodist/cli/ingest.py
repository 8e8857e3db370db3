"""
Corpus ingestion.

bytes: every byte is a symbol over the 256-value alphabet, nothing is filtered.
text:  the same as bytes unless an explicit token alphabet is given; then
       whitespace is skipped and characters outside the alphabet are dropped.
fasta: header lines are stripped, sequence lines uppercased and concatenated
       over {A, C, G, T}; anything else is dropped.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import List, Optional, Sequence

from infodist.alphabet import BYTE_ALPHABET, DNA_ALPHABET, Alphabet, SymbolString
from infodist.cli.exceptions import EmptySequenceAfterFiltering, IoFailure, UsageError
from utils.logger import get_logger

logger = get_logger(__name__)


class IngestMode(str, Enum):
    BYTES = "bytes"
    TEXT = "text"
    FASTA = "fasta"


@dataclass(frozen=True)
class IngestionReport:
    input_units: int
    kept: int
    dropped: int
    warnings: List[str] = field(default_factory=list)

    def __post_init__(self) -> None:
        if self.kept + self.dropped != self.input_units:
            raise ValueError(f"inconsistent report: {self.kept} kept + {self.dropped} dropped != {self.input_units}")


@dataclass(frozen=True)
class CorpusItem:
    label: str
    path: Path
    mode: IngestMode
    string: SymbolString
    report: IngestionReport


def _read_bytes(path: Path) -> bytes:
    try:
        return path.read_bytes()
    except OSError as e:
        raise IoFailure(f"cannot read {path}: {e}") from e


def ingest_bytes(path: str | Path, label: Optional[str] = None) -> CorpusItem:
    p = Path(path)
    raw = _read_bytes(p)
    warnings = [] if raw else [f"{p} is empty"]
    if not raw:
        logger.warning("empty_input", path=str(p))
    string = SymbolString(BYTE_ALPHABET, tuple(raw))
    report = IngestionReport(input_units=len(raw), kept=len(raw), dropped=0, warnings=warnings)
    return CorpusItem(label or p.stem, p, IngestMode.BYTES, string, report)


def _filter(units: Sequence, alphabet: Alphabet, path: Path, mode: IngestMode, label: str) -> CorpusItem:
    index = alphabet.index
    kept = [index[u] for u in units if u in index]
    dropped = len(units) - len(kept)
    if not kept:
        raise EmptySequenceAfterFiltering(f"{path}: no symbols left after filtering ({dropped} dropped)")
    if dropped:
        logger.info("symbols_dropped", path=str(path), dropped=dropped, kept=len(kept))
    report = IngestionReport(input_units=len(units), kept=len(kept), dropped=dropped)
    return CorpusItem(label, path, mode, SymbolString(alphabet, tuple(kept)), report)


def ingest_fasta(path: str | Path, label: Optional[str] = None) -> CorpusItem:
    p = Path(path)
    text = _read_bytes(p).decode("utf-8", errors="replace")
    header: Optional[str] = None
    sequence: List[str] = []
    for line in text.splitlines():
        line = line.strip()
        if line.startswith(">"):
            if header is None:
                header = (line[1:].split() or [""])[0]
            continue
        sequence.append(line.upper())
    units = list("".join(sequence))
    return _filter(units, DNA_ALPHABET, p, IngestMode.FASTA, label or header or p.stem)


def parse_alphabet(spec: str) -> Alphabet:
    """Whitespace-separated tokens, e.g. "a b c d"."""
    tokens = spec.split()
    return Alphabet(tuple(tokens))


def ingest_text(path: str | Path, alphabet: Optional[Alphabet] = None, label: Optional[str] = None) -> CorpusItem:
    p = Path(path)
    if alphabet is None:
        item = ingest_bytes(p, label)
        return CorpusItem(item.label, p, IngestMode.TEXT, item.string, item.report)

    text = _read_bytes(p).decode("utf-8", errors="replace")
    if all(len(str(t)) == 1 for t in alphabet.symbols):
        units = [ch for ch in text if not ch.isspace()]
    else:
        units = text.split()
    return _filter(units, alphabet, p, IngestMode.TEXT, label or p.stem)


def ingest(path: str | Path, mode: IngestMode | str = IngestMode.BYTES, alphabet: Optional[Alphabet] = None) -> CorpusItem:
    mode = IngestMode(mode)
    if alphabet is not None and mode is not IngestMode.TEXT:
        raise UsageError("--alphabet only applies to text mode")
    if mode is IngestMode.FASTA:
        return ingest_fasta(path)
    if mode is IngestMode.TEXT:
        return ingest_text(path, alphabet)
    return ingest_bytes(path)


def ingest_corpus(paths: Sequence[str | Path], mode: IngestMode | str, alphabet: Optional[Alphabet] = None) -> List[CorpusItem]:
    items = [ingest(p, mode, alphabet) for p in paths]
    seen: dict = {}
    for item in items:
        if item.label in seen:
            raise UsageError(f"duplicate corpus label {item.label!r} ({seen[item.label]} and {item.path})")
        seen[item.label] = item.path
    return items
