"""Square PHYLIP distance matrices: a count line, then one row per taxon."""
from __future__ import annotations

from pathlib import Path
from typing import List

from infodist.distances import DistanceMatrix
from infodist.phylo.exceptions import PhylipFormatError

LABEL_WIDTH = 10


def write_phylip(m: DistanceMatrix, precision: int = 6) -> str:
    """Labels padded or truncated to 10 characters, then space-separated distances."""
    names = [str(label)[:LABEL_WIDTH] for label in m.labels]
    if len(set(names)) != len(names):
        raise PhylipFormatError(f"labels are not unique after truncation to {LABEL_WIDTH} characters: {names}")
    lines = [str(m.size)]
    for name, row in zip(names, m.values):
        lines.append(name.ljust(LABEL_WIDTH) + " " + " ".join(f"{v:.{precision}f}" for v in row))
    return "\n".join(lines) + "\n"


def _parse_row(line: str, lineno: int, expected: int) -> tuple[str, List[float]]:
    tokens = line.split()
    if len(tokens) == expected + 1:
        label, fields = tokens[0], tokens[1:]
    else:
        label, fields = line[:LABEL_WIDTH].strip(), line[LABEL_WIDTH:].split()
    if not label or len(fields) != expected:
        raise PhylipFormatError(f"expected a label and {expected} distances", lineno)
    try:
        return label, [float(v) for v in fields]
    except ValueError as e:
        raise PhylipFormatError(f"bad distance value: {e}", lineno) from e


def parse_phylip(text: str) -> DistanceMatrix:
    lines = [(i, line) for i, line in enumerate(text.splitlines(), start=1) if line.strip()]
    if not lines:
        raise PhylipFormatError("empty matrix file")
    first_no, first = lines[0]
    try:
        count = int(first.split()[0])
    except ValueError as e:
        raise PhylipFormatError("first line must be the taxa count", first_no) from e
    rows = lines[1:]
    if len(rows) != count:
        raise PhylipFormatError(f"header announces {count} taxa, found {len(rows)} rows")

    labels, values = [], []
    for lineno, line in rows:
        label, row = _parse_row(line, lineno, count)
        labels.append(label)
        values.append(row)
    return DistanceMatrix(tuple(labels), values)


def read_phylip(path: str | Path) -> DistanceMatrix:
    return parse_phylip(Path(path).read_text(encoding="utf-8"))
