"""Suffix automaton over a reference sequence, used for longest-match queries."""
from __future__ import annotations

from typing import Dict, List, Sequence


class SuffixAutomaton:
    """Minimal automaton accepting every substring of `sequence`.

    States are stored in parallel lists; state 0 is the empty string.
    """

    def __init__(self, sequence: Sequence[int]):
        self.length: List[int] = [0]
        self.link: List[int] = [-1]
        self.next: List[Dict[int, int]] = [{}]
        self._last = 0
        for symbol in sequence:
            self._extend(symbol)

    def _new_state(self, length: int, link: int, transitions: Dict[int, int]) -> int:
        self.length.append(length)
        self.link.append(link)
        self.next.append(transitions)
        return len(self.length) - 1

    def _extend(self, symbol: int) -> None:
        current = self._new_state(self.length[self._last] + 1, 0, {})
        p = self._last
        while p >= 0 and symbol not in self.next[p]:
            self.next[p][symbol] = current
            p = self.link[p]

        if p >= 0:
            q = self.next[p][symbol]
            if self.length[p] + 1 == self.length[q]:
                self.link[current] = q
            else:
                clone = self._new_state(self.length[p] + 1, self.link[q], dict(self.next[q]))
                while p >= 0 and self.next[p].get(symbol) == q:
                    self.next[p][symbol] = clone
                    p = self.link[p]
                self.link[q] = self.link[current] = clone
        self._last = current

    @property
    def state_count(self) -> int:
        return len(self.length)

    def contains(self, query: Sequence[int]) -> bool:
        state = 0
        for symbol in query:
            state = self.next[state].get(symbol, -1)
            if state < 0:
                return False
        return True

    def longest_prefix_match(self, target: Sequence[int], start: int) -> int:
        """Length of the longest prefix of target[start:] that occurs in the reference."""
        state, end = 0, start
        while end < len(target):
            state = self.next[state].get(target[end], -1)
            if state < 0:
                break
            end += 1
        return end - start
