"""Adapter that treats any off-the-shelf compressor as a codelength estimator."""
from __future__ import annotations

import shlex
import subprocess
import tempfile
from pathlib import Path
from typing import List, Optional, Union

import numpy as np
from pydantic import BaseModel, Field, field_validator

from infodist.alphabet import SymbolString
from infodist.estimators.base import BaseEstimator, CodelengthReport
from infodist.estimators.exceptions import AdapterFailure, AlphabetTooLarge
from utils.logger import get_logger, trace_method
from utils.observability import observe

logger = get_logger(__name__)

IN_PLACEHOLDER = "{in}"
OUT_PLACEHOLDER = "{out}"


def serialize(z: SymbolString) -> bytes:
    """One byte per symbol up to 256 symbols, two bytes little-endian up to 65536."""
    m = z.alphabet.size
    if m <= 256:
        return z.codes.astype(np.uint8).tobytes()
    if m <= 65536:
        return z.codes.astype("<u2").tobytes()
    raise AlphabetTooLarge(f"alphabet of {m} symbols cannot be serialized in two bytes")


class ExternalCompressor(BaseModel):
    """Command template run once per input.

    `{in}` is replaced by the path of the serialized input and `{out}` by the path the
    command must write its compressed output to, e.g. ``"gzip -9 -c {in} > {out}"``
    with ``shell=True`` or ``["xz", "-k", "-c", ...]`` as an argument list.
    """

    command: Union[str, List[str]]
    name: str = "external"
    shell: bool = False
    timeout: float = Field(default=300.0, gt=0)

    @field_validator("command")
    @classmethod
    def _has_placeholders(cls, value: Union[str, List[str]]) -> Union[str, List[str]]:
        text = value if isinstance(value, str) else " ".join(value)
        if not text.strip():
            raise ValueError("compressor command is empty")
        if IN_PLACEHOLDER not in text or OUT_PLACEHOLDER not in text:
            raise ValueError("compressor command needs both {in} and {out} placeholders")
        return value

    def _argv(self, in_path: Path, out_path: Path) -> Union[str, List[str]]:
        def fill(part: str) -> str:
            return part.replace(IN_PLACEHOLDER, str(in_path)).replace(OUT_PLACEHOLDER, str(out_path))

        if self.shell:
            text = self.command if isinstance(self.command, str) else shlex.join(self.command)
            return fill(text)
        parts = shlex.split(self.command) if isinstance(self.command, str) else list(self.command)
        return [fill(p) for p in parts]

    def compressed_size(self, payload: bytes) -> int:
        """Run the command on `payload` and return the byte length of its output."""
        with tempfile.TemporaryDirectory(prefix="infodist-") as tmp:
            in_path, out_path = Path(tmp) / "input.bin", Path(tmp) / "output.bin"
            in_path.write_bytes(payload)
            try:
                completed = subprocess.run(
                    self._argv(in_path, out_path),
                    shell=self.shell,
                    stdout=subprocess.PIPE,
                    stderr=subprocess.PIPE,
                    timeout=self.timeout,
                    check=False,
                )
            except subprocess.TimeoutExpired as e:
                raise AdapterFailure(f"{self.name} timed out after {self.timeout}s") from e
            except OSError as e:
                raise AdapterFailure(f"{self.name} could not be started: {e}") from e

            if completed.returncode != 0:
                tail = completed.stderr.decode("utf-8", errors="replace").strip()[-500:]
                raise AdapterFailure(f"{self.name} exited with status {completed.returncode}: {tail}")
            if not out_path.exists():
                raise AdapterFailure(f"{self.name} produced no output file")
            size = out_path.stat().st_size

        logger.debug("external_compressor_run", name=self.name, input_bytes=len(payload), output_bytes=size)
        return size


class ExternalEstimator(BaseEstimator):
    """Rate is 8 * compressed bytes / |z|."""

    min_length = 1

    def __init__(self, adapter: ExternalCompressor):
        self.adapter = adapter

    @property
    def estimator_id(self) -> str:
        return f"external:{self.adapter.name}"

    @trace_method
    @observe(estimator=True)
    def codelength(self, z: SymbolString) -> CodelengthReport:
        size = self.adapter.compressed_size(serialize(z))
        return CodelengthReport(8.0 * size, len(z), self.estimator_id)


def external_entropy(z: SymbolString, adapter: ExternalCompressor) -> float:
    return ExternalEstimator(adapter).entropy(z)


def adapter_from_command(command: str, name: Optional[str] = None) -> ExternalCompressor:
    """Shell-style command line, run through the shell so redirections work."""
    return ExternalCompressor(command=command, name=name or shlex.split(command)[0], shell=True)
