from __future__ import annotations

import os
import sys
import tempfile
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from infodist.cli.exceptions import IoFailure

Output = Tuple[Optional[str | Path], str]


def _to_stdout(path: Optional[str | Path]) -> bool:
    return path is None or str(path) == "-"


def _stage(target: Path, text: str) -> str:
    """Write text to a temporary file next to target and return its name."""
    directory = target.parent if str(target.parent) else Path(".")
    try:
        directory.mkdir(parents=True, exist_ok=True)
        fd, tmp_name = tempfile.mkstemp(prefix=f".{target.name}.", dir=directory)
    except OSError as e:
        raise IoFailure(f"cannot write {target}: {e}") from e
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
    except BaseException as e:
        Path(tmp_name).unlink(missing_ok=True)
        if isinstance(e, OSError):
            raise IoFailure(f"cannot write {target}: {e}") from e
        raise
    return tmp_name


def emit_all(outputs: Sequence[Output]) -> None:
    """Stage every file output before renaming any of them into place, then write stdout.

    A failure while staging removes what was staged, so no target is touched.
    """
    staged: List[Tuple[str, Path]] = []
    try:
        for path, text in outputs:
            if not _to_stdout(path):
                target = Path(path)
                staged.append((_stage(target, text), target))
    except BaseException:
        for tmp_name, _ in staged:
            Path(tmp_name).unlink(missing_ok=True)
        raise

    for tmp_name, target in staged:
        try:
            os.replace(tmp_name, target)
        except OSError as e:
            Path(tmp_name).unlink(missing_ok=True)
            raise IoFailure(f"cannot write {target}: {e}") from e

    for path, text in outputs:
        if _to_stdout(path):
            sys.stdout.write(text)
    sys.stdout.flush()


def emit(text: str, path: Optional[str | Path] = None) -> None:
    """Send finished output to a file, or to stdout when no path (or '-') is given."""
    emit_all([(path, text)])
