from infodist.cli.exceptions import CliError, EmptySequenceAfterFiltering, IoFailure, UsageError
from infodist.cli.ingest import (
    CorpusItem,
    IngestionReport,
    IngestMode,
    ingest,
    ingest_bytes,
    ingest_corpus,
    ingest_fasta,
    ingest_text,
    parse_alphabet,
)

__all__ = [
    "CliError",
    "EmptySequenceAfterFiltering",
    "IoFailure",
    "UsageError",
    "CorpusItem",
    "IngestionReport",
    "IngestMode",
    "ingest",
    "ingest_bytes",
    "ingest_corpus",
    "ingest_fasta",
    "ingest_text",
    "parse_alphabet",
]
