"""
Finite-order stationary Markov sources with exact information rates.

A source of order k over alphabet A keeps one probability row per state, a
state being the last k symbols. States are coded base |A| with the oldest
symbol most significant, so emitting symbol a from state s moves to
(s * |A| + a) mod |A|^k. All rates are in bits per symbol.
"""
from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components
from scipy.stats import entropy

from infodist.alphabet import Alphabet, AlphabetMismatch, SuperString, SymbolString
from infodist.sources.exceptions import InvalidTransition, MarginalNotMarkov, NotIrreducible
from utils.logger import get_logger

logger = get_logger(__name__)

ROW_SUM_TOLERANCE = 1e-12
STATIONARY_TOLERANCE = 1e-10


@dataclass(frozen=True, eq=False)
class MarkovSource:
    """Order-k stationary Markov source; `transition[state, symbol]` = P(symbol | state)."""

    alphabet: Alphabet
    order: int
    transition: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        if self.order < 0:
            raise InvalidTransition(f"order must be >= 0, got {self.order}")
        table = np.array(self.transition, dtype=float)
        expected = (self.alphabet.size ** self.order, self.alphabet.size)
        if table.shape != expected:
            raise InvalidTransition(f"transition shape {table.shape} != {expected} for order {self.order}")
        if np.any(table < 0):
            raise InvalidTransition("transition probabilities must be >= 0")
        worst = float(np.max(np.abs(table.sum(axis=1) - 1.0)))
        if worst > ROW_SUM_TOLERANCE:
            raise InvalidTransition(f"transition rows must sum to 1 (worst deviation {worst:.3e})")
        table.setflags(write=False)
        object.__setattr__(self, "transition", table)
        _check_single_recurrent_class(self)

    @classmethod
    def iid(cls, alphabet: Alphabet, probabilities: Sequence[float]) -> "MarkovSource":
        return cls(alphabet, 0, np.asarray([probabilities], dtype=float))

    @classmethod
    def from_rows(cls, alphabet: Alphabet, order: int, rows: Sequence[Sequence[float]]) -> "MarkovSource":
        return cls(alphabet, order, np.asarray(rows, dtype=float))

    @property
    def state_count(self) -> int:
        return self.alphabet.size ** self.order

    def state_tuple(self, state: int) -> Tuple[int, ...]:
        """Symbol indices of a state code, oldest first."""
        m = self.alphabet.size
        digits = []
        for _ in range(self.order):
            state, digit = divmod(state, m)
            digits.append(digit)
        return tuple(reversed(digits))

    def state_code(self, symbols: Sequence[int]) -> int:
        code = 0
        for s in symbols:
            code = code * self.alphabet.size + s
        return code

    def state_matrix(self) -> np.ndarray:
        """Row-stochastic matrix of the chain on states."""
        m, count = self.alphabet.size, self.state_count
        matrix = np.zeros((count, count))
        for s in range(count):
            for a in range(m):
                matrix[s, (s * m + a) % count] += self.transition[s, a]
        return matrix

    def lift(self, order: int) -> "MarkovSource":
        """The same process described at a higher order (rows depend only on the last k symbols)."""
        if order < self.order:
            raise InvalidTransition(f"cannot lift order {self.order} down to {order}")
        if order == self.order:
            return self
        m = self.alphabet.size
        states = np.arange(m ** order)
        return MarkovSource(self.alphabet, order, self.transition[states % (m ** self.order)])


def _check_single_recurrent_class(src: MarkovSource) -> None:
    """A unique stationary distribution exists iff the state graph has exactly one closed class."""
    graph = csr_matrix(src.state_matrix() > 0)
    count, labels = connected_components(graph, directed=True, connection="strong")
    if count == 1:
        return
    rows, cols = graph.nonzero()
    leaving = {int(labels[r]) for r, c in zip(rows, cols) if labels[r] != labels[c]}
    closed = count - len(leaving)
    if closed != 1:
        raise NotIrreducible(f"state chain has {closed} closed classes; a unique stationary distribution needs exactly one")


def stationary_distribution(src: MarkovSource) -> np.ndarray:
    """Probability vector pi over states with pi P = pi."""
    matrix = src.state_matrix()
    count = matrix.shape[0]
    system = np.vstack([matrix.T - np.eye(count), np.ones((1, count))])
    target = np.zeros(count + 1)
    target[-1] = 1.0
    pi, *_ = np.linalg.lstsq(system, target, rcond=None)
    pi = np.clip(pi, 0.0, None)
    pi /= pi.sum()

    residual = float(np.max(np.abs(pi @ matrix - pi)))
    if residual > STATIONARY_TOLERANCE:
        raise NotIrreducible(f"stationary solve did not converge (residual {residual:.3e})")
    return pi


def block_distribution(src: MarkovSource, length: int) -> np.ndarray:
    """Stationary probability of every block of `length` >= order symbols, coded like states."""
    if length < src.order:
        raise InvalidTransition(f"block length {length} below source order {src.order}")
    m, count = src.alphabet.size, src.state_count
    blocks = stationary_distribution(src)
    for size in range(src.order, length):
        context = np.arange(m ** size) % count
        blocks = (blocks[:, None] * src.transition[context]).reshape(-1)
    return blocks


def exact_entropy_rate(src: MarkovSource) -> float:
    """H = -sum_s pi(s) sum_a P(a|s) log2 P(a|s)."""
    pi = stationary_distribution(src)
    rate = float(pi @ entropy(src.transition, base=2, axis=1))
    return min(max(rate, 0.0), math.log2(src.alphabet.size))


def exact_divergence_rate(q: MarkovSource, p: MarkovSource) -> float:
    """Relative entropy rate D(q || p) in bits per symbol; math.inf when q leaves p's support."""
    if q.alphabet != p.alphabet:
        raise AlphabetMismatch(f"divergence needs one alphabet: {q.alphabet!r} vs {p.alphabet!r}")
    order = max(q.order, p.order)
    weights = block_distribution(q, order)
    q_rows = q.lift(order).transition
    p_rows = p.lift(order).transition

    reachable = weights > 0
    used = (q_rows > 0) & reachable[:, None]
    if np.any(used & (p_rows == 0)):
        logger.warning("divergence_infinite", q_order=q.order, p_order=p.order)
        return math.inf

    terms = np.zeros_like(q_rows)
    terms[used] = q_rows[used] * np.log2(q_rows[used] / p_rows[used])
    return max(float(weights @ terms.sum(axis=1)), 0.0)


def _cumulative(rows: np.ndarray) -> np.ndarray:
    cum = np.cumsum(rows / rows.sum(axis=-1, keepdims=True), axis=-1)
    cum[..., -1] = 1.0
    return cum


def sample_codes(src: MarkovSource, n: int, seed: int) -> np.ndarray:
    """Length-n index array; the initial k-block is drawn from the stationary distribution."""
    if n < 0:
        raise ValueError(f"sample length must be >= 0, got {n}")
    m, k = src.alphabet.size, src.order
    rng = np.random.default_rng(seed)
    uniforms = rng.random(n + 1)
    if n == 0:
        return np.zeros(0, dtype=np.int64)

    if k == 0:
        cum = _cumulative(src.transition[0])
        return np.minimum(np.searchsorted(cum, uniforms[1:], side="right"), m - 1).astype(np.int64)

    start_cum = _cumulative(stationary_distribution(src))
    state = min(int(np.searchsorted(start_cum, uniforms[0], side="right")), src.state_count - 1)
    out = list(src.state_tuple(state))[:n]

    table = _cumulative(src.transition).tolist()
    count = src.state_count
    for u in uniforms[1 : max(n - k, 0) + 1].tolist():
        symbol = min(bisect_right(table[state], u), m - 1)
        out.append(symbol)
        state = (state * m + symbol) % count
    return np.asarray(out, dtype=np.int64)


def sample(src: MarkovSource, n: int, seed: int) -> SymbolString:
    """Reproducible stationary sample: equal (src, n, seed) gives identical output."""
    return SymbolString.from_codes(src.alphabet, sample_codes(src, n, seed))


class ConditionalDirection(str, Enum):
    X_GIVEN_Y = "x-given-y"
    Y_GIVEN_X = "y-given-x"


@dataclass(frozen=True, eq=False)
class JointMarkovSource:
    """A Markov source over A x A together with its (Markov) marginals when they exist."""

    base_alphabet: Alphabet
    chain: MarkovSource
    construction: str
    x_marginal: Optional[MarkovSource] = None
    y_marginal: Optional[MarkovSource] = None

    @classmethod
    def independent(cls, x: MarkovSource, y: MarkovSource) -> "JointMarkovSource":
        if x.alphabet != y.alphabet:
            raise AlphabetMismatch("joint source components must share an alphabet")
        order = max(x.order, y.order)
        xl, yl = x.lift(order), y.lift(order)
        x_states, y_states = _split_joint_states(x.alphabet.size, order)
        # table[s, a*m + b] = Px(a | x-part) * Py(b | y-part)
        table = (xl.transition[x_states][:, :, None] * yl.transition[y_states][:, None, :]).reshape(len(x_states), -1)
        chain = MarkovSource(x.alphabet.product(), order, table)
        return cls(x.alphabet, chain, "independent", x_marginal=x, y_marginal=y)

    @classmethod
    def through_channel(cls, x: MarkovSource, channel: Sequence[Sequence[float]]) -> "JointMarkovSource":
        """y_t drawn from channel[x_t] independently per symbol (copy, flips, substitutions)."""
        m = x.alphabet.size
        w = np.asarray(channel, dtype=float)
        if w.shape != (m, m) or np.any(w < 0) or np.max(np.abs(w.sum(axis=1) - 1.0)) > ROW_SUM_TOLERANCE:
            raise InvalidTransition(f"channel must be a {m}x{m} row-stochastic matrix")
        x_states, _ = _split_joint_states(m, x.order)
        table = (x.transition[x_states][:, :, None] * w[None, :, :]).reshape(len(x_states), -1)
        chain = MarkovSource(x.alphabet.product(), x.order, table)
        return cls(x.alphabet, chain, "channel", x_marginal=x, y_marginal=_channel_output(x, w))

    def marginal(self, axis: int) -> MarkovSource:
        src = self.x_marginal if axis == 0 else self.y_marginal
        if src is None:
            raise MarginalNotMarkov(f"{'x' if axis == 0 else 'y'} marginal of this {self.construction} joint is not finite-order Markov")
        return src


def _split_joint_states(m: int, order: int) -> Tuple[np.ndarray, np.ndarray]:
    """x-part and y-part state codes for every joint state code over A x A."""
    count = (m * m) ** order
    x_states = np.zeros(count, dtype=np.int64)
    y_states = np.zeros(count, dtype=np.int64)
    codes = np.arange(count)
    for position in range(order):
        pair = (codes // ((m * m) ** (order - 1 - position))) % (m * m)
        x_states = x_states * m + pair // m
        y_states = y_states * m + pair % m
    return x_states, y_states


def _channel_output(x: MarkovSource, w: np.ndarray) -> Optional[MarkovSource]:
    """The y marginal when it is Markov of x's order: memoryless input, or a permutation channel."""
    if x.order == 0:
        return MarkovSource.iid(x.alphabet, x.transition[0] @ w)
    if not (np.all((w == 0) | (w == 1)) and np.all(w.sum(axis=0) == 1)):
        logger.info("channel_marginal_hidden_markov", order=x.order)
        return None

    inverse = np.argmax(w, axis=0)  # inverse[b] = the a with w[a, b] = 1
    m = x.alphabet.size
    rows = np.zeros_like(x.transition)
    for y_state in range(x.state_count):
        x_state = x.state_code([int(inverse[s]) for s in x.state_tuple(y_state)])
        rows[y_state] = x.transition[x_state][inverse[np.arange(m)]]
    return MarkovSource(x.alphabet, x.order, rows)


def exact_joint_entropy_rate(joint: JointMarkovSource) -> float:
    """Entropy rate of the product-alphabet chain, bits per supersymbol."""
    return exact_entropy_rate(joint.chain)


def exact_conditional_entropy_rate(joint: JointMarkovSource, direction: ConditionalDirection | str) -> float:
    """H(X|Y) = H(X,Y) - H(Y) (or the mirror), clamped at 0 against rounding."""
    direction = ConditionalDirection(direction)
    given = joint.marginal(1 if direction is ConditionalDirection.X_GIVEN_Y else 0)
    value = exact_joint_entropy_rate(joint) - exact_entropy_rate(given)
    if value < -STATIONARY_TOLERANCE:
        logger.warning("conditional_rate_negative", value=value, direction=direction.value)
    return max(value, 0.0)


def sample_super(joint: JointMarkovSource, n: int, seed: int) -> SuperString:
    codes = sample_codes(joint.chain, n, seed)
    return SuperString(joint.base_alphabet, tuple(codes.tolist()))


def sample_pair(joint: JointMarkovSource, n: int, seed: int) -> Tuple[SymbolString, SymbolString]:
    """Sample the joint chain and split it into its x and y strings."""
    pairs = sample_super(joint, n, seed)
    return pairs.project(0), pairs.project(1)
