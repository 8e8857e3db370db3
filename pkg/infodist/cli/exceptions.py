from __future__ import annotations

from infodist.exceptions import InfodistError


class CliError(InfodistError):
    """Base exception for the command-line surface."""


class IoFailure(CliError, OSError):
    """An input could not be read or an output could not be written."""


class EmptySequenceAfterFiltering(CliError, ValueError):
    """No symbol survived ingestion filtering."""


class UsageError(CliError, ValueError):
    """Flags or inputs that parse but cannot be used together."""
