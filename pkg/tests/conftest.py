import sys
from pathlib import Path
from typing import Sequence

import pytest

# Ensure project root is on sys.path for 'infodist' and 'utils' imports
ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))


# Shared sources and helpers available to all tests
from infodist.alphabet import Alphabet, SymbolString, encode_string
from infodist.estimators import ExternalCompressor
from infodist.sources import JointMarkovSource, MarkovSource, sample

BINARY = Alphabet(("0", "1"))
AB = Alphabet(("a", "b"))
ABC = Alphabet(("a", "b", "c"))

UNIFORM = MarkovSource.iid(BINARY, [0.5, 0.5])
SKEWED = MarkovSource.iid(BINARY, [0.9, 0.1])
BIASED = MarkovSource.iid(BINARY, [0.843, 0.157])
FLIP = MarkovSource.from_rows(BINARY, 1, [[0.9, 0.1], [0.1, 0.9]])

COPY_CHANNEL = [[1.0, 0.0], [0.0, 1.0]]
FLIP_CHANNEL = [[0.9, 0.1], [0.1, 0.9]]

H_01 = 0.4689955935892812  # binary entropy of 0.1


def s(text: str, alphabet: Alphabet = AB) -> SymbolString:
    """Character string to SymbolString, e.g. s("abab")."""
    return encode_string(text, alphabet)


def bits(text: str) -> SymbolString:
    return encode_string(text, BINARY)


def draw(src: MarkovSource, n: int, seed: int) -> SymbolString:
    return sample(src, n, seed)


def copy_pair(n: int, seed: int):
    x = draw(UNIFORM, n, seed)
    return x, x


def independent_joint() -> JointMarkovSource:
    return JointMarkovSource.independent(UNIFORM, UNIFORM)


def channel_joint(channel: Sequence[Sequence[float]]) -> JointMarkovSource:
    return JointMarkovSource.through_channel(UNIFORM, channel)


class CopyCompressor(ExternalCompressor):
    """A "compressor" that copies its input verbatim (rate 8 bits per serialized byte)."""

    def __init__(self, **kwargs):
        script = "import shutil, sys; shutil.copyfile(sys.argv[1], sys.argv[2])"
        super().__init__(command=[sys.executable, "-c", script, "{in}", "{out}"], name="copy", **kwargs)


def python_compressor(module: str) -> ExternalCompressor:
    """zlib/bz2/lzma from the running interpreter, as an external command."""
    script = (
        f"import {module}, sys; "
        f"open(sys.argv[2], 'wb').write({module}.compress(open(sys.argv[1], 'rb').read()))"
    )
    return ExternalCompressor(command=[sys.executable, "-c", script, "{in}", "{out}"], name=module)


@pytest.fixture
def copy_compressor() -> CopyCompressor:
    return CopyCompressor()


@pytest.fixture
def write_file(tmp_path):
    """Write text or bytes under tmp_path and return the path."""

    def _write(name: str, content) -> Path:
        path = tmp_path / name
        if isinstance(content, bytes):
            path.write_bytes(content)
        else:
            path.write_text(content, encoding="utf-8")
        return path

    return _write
