"""
Source specification files.

Line-oriented, '#' starts a comment, blank lines are ignored::

    alphabet: a b
    order: 1
    state a: 0.9 0.1
    state b: 0.2 0.8

One `state` line per state; the state tuple lists the last `order` tokens,
oldest first (`state: ...` or `state (): ...` for order 0). Optional
`channel <token>: ...` rows (one per token) describe a memoryless channel
that turns the source into a joint (x, y) source.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import numpy as np

from infodist.alphabet import Alphabet, AlphabetError
from infodist.sources.exceptions import SourceError, SourceSpecError
from infodist.sources.markov import JointMarkovSource, MarkovSource

_KEY_LINE = re.compile(r"^(?P<key>alphabet|order|state|channel)\b(?P<head>[^:]*):(?P<body>.*)$")


@dataclass(frozen=True, eq=False)
class SourceSpec:
    source: MarkovSource
    channel: Optional[np.ndarray] = None
    name: str = ""

    def joint(self) -> JointMarkovSource:
        if self.channel is None:
            raise SourceSpecError("spec declares no channel rows", path=self.name or None)
        return JointMarkovSource.through_channel(self.source, self.channel)


def _split_tokens(text: str) -> List[str]:
    return [t for t in re.split(r"[\s,()]+", text.strip()) if t]


def _parse_probabilities(body: str, lineno: int, path: str | None) -> List[float]:
    try:
        return [float(v) for v in body.split()]
    except ValueError as e:
        raise SourceSpecError(f"bad probability row: {e}", lineno, path) from e


def parse_source_spec(text: str, name: str = "") -> SourceSpec:
    path = name or None
    alphabet_tokens: Optional[List[str]] = None
    order: Optional[int] = None
    states: Dict[Tuple[str, ...], Tuple[int, List[float]]] = {}
    channel: Dict[str, Tuple[int, List[float]]] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        match = _KEY_LINE.match(line)
        if not match:
            raise SourceSpecError(f"unrecognised line {line!r}", lineno, path)
        key, head, body = match.group("key"), match.group("head"), match.group("body")

        if key == "alphabet":
            alphabet_tokens = _split_tokens(body)
        elif key == "order":
            try:
                order = int(body.strip())
            except ValueError as e:
                raise SourceSpecError(f"order must be an integer, got {body.strip()!r}", lineno, path) from e
        elif key == "state":
            state = tuple(_split_tokens(head))
            if state in states:
                raise SourceSpecError(f"state {state} defined twice", lineno, path)
            states[state] = (lineno, _parse_probabilities(body, lineno, path))
        else:
            tokens = _split_tokens(head)
            if len(tokens) != 1:
                raise SourceSpecError("channel rows take exactly one input token", lineno, path)
            channel[tokens[0]] = (lineno, _parse_probabilities(body, lineno, path))

    if alphabet_tokens is None or order is None:
        raise SourceSpecError("spec needs both 'alphabet:' and 'order:' lines", path=path)
    try:
        alphabet = Alphabet(tuple(alphabet_tokens))
    except AlphabetError as e:
        raise SourceSpecError(str(e), path=path) from e

    m = alphabet.size
    rows = np.zeros((m ** order, m))
    filled = 0
    for state, (lineno, probs) in states.items():
        if len(state) != order or any(t not in alphabet.index for t in state):
            raise SourceSpecError(f"state {state} does not match order {order} over the alphabet", lineno, path)
        if len(probs) != m:
            raise SourceSpecError(f"row has {len(probs)} entries, alphabet has {m}", lineno, path)
        code = 0
        for token in state:
            code = code * m + alphabet.index[token]
        rows[code] = probs
        filled += 1
    if filled != m ** order:
        raise SourceSpecError(f"{filled} state rows given, order {order} needs {m ** order}", path=path)

    try:
        source = MarkovSource(alphabet, order, rows)
    except SourceError as e:
        raise SourceSpecError(str(e), path=path) from e

    matrix = None
    if channel:
        matrix = np.zeros((m, m))
        for token, (lineno, probs) in channel.items():
            if token not in alphabet.index or len(probs) != m:
                raise SourceSpecError(f"bad channel row for {token!r}", lineno, path)
            matrix[alphabet.index[token]] = probs
        if len(channel) != m:
            raise SourceSpecError(f"channel needs {m} rows, got {len(channel)}", path=path)

    return SourceSpec(source=source, channel=matrix, name=name)


def load_source_spec(path: str | Path) -> SourceSpec:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as e:
        raise SourceSpecError(f"cannot read spec: {e}", path=str(p)) from e
    return parse_source_spec(text, name=str(p))


def format_source_spec(source: MarkovSource, channel: Optional[np.ndarray] = None) -> str:
    """Render a source back into the spec grammar (repr-exact floats)."""
    tokens = [str(t) for t in source.alphabet.symbols]
    lines = [f"alphabet: {' '.join(tokens)}", f"order: {source.order}"]
    for state in range(source.state_count):
        head = " ".join(tokens[i] for i in source.state_tuple(state))
        row = " ".join(repr(float(p)) for p in source.transition[state])
        lines.append(f"state {head}: {row}" if head else f"state: {row}")
    if channel is not None:
        for i, token in enumerate(tokens):
            lines.append(f"channel {token}: {' '.join(repr(float(p)) for p in channel[i])}")
    return "\n".join(lines) + "\n"
