"""
Order-k Krichevsky-Trofimov context coding.

Codelengths are computed arithmetically, no bitstream is produced. For a context s
seen n_s times with symbol counts n_sa the sequential add-one-half assignment has
the closed form

    bits(s) = log2 G(n_s + m/2) - log2 G(m/2) - sum_a [log2 G(n_sa + 1/2) - log2 G(1/2)]

so a whole string is coded by counting (context, symbol) pairs once. Positions
t < k use their own t-symbol prefix as a context that occurs only once and cost
log2 m bits each.
"""
from __future__ import annotations

import math
from typing import Tuple

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view
from scipy.special import gammaln

from infodist.alphabet import PairingPolicy, SymbolString, pair_supersymbols, require_same_alphabet
from infodist.estimators.base import BaseEstimator, CodelengthReport
from infodist.estimators.exceptions import InputTooShort
from utils.logger import trace_method
from utils.observability import observe

LN2 = math.log(2.0)


def _history(codes: np.ndarray, k: int) -> np.ndarray:
    """Rows codes[t-k:t] for t = k .. n-1."""
    n = codes.size
    if n <= k:
        return np.empty((0, k), dtype=np.int64)
    if k == 0:
        return np.empty((n, 0), dtype=np.int64)
    return sliding_window_view(codes, k)[: n - k]


def _dense_contexts(windows: np.ndarray) -> np.ndarray:
    """Map each context row to a dense id so (id, symbol) keys never overflow."""
    if windows.shape[0] == 0 or windows.shape[1] == 0:
        return np.zeros(windows.shape[0], dtype=np.int64)
    _, ids = np.unique(windows, axis=0, return_inverse=True)
    return ids.reshape(-1).astype(np.int64)


def _kt_bits(contexts: np.ndarray, symbols: np.ndarray, m: int) -> float:
    if symbols.size == 0:
        return 0.0
    _, pair_counts = np.unique(contexts * m + symbols, return_counts=True)
    _, context_counts = np.unique(contexts, return_counts=True)
    half_m = m / 2.0
    nats = np.sum(gammaln(context_counts + half_m) - gammaln(half_m))
    nats -= np.sum(gammaln(pair_counts + 0.5) - gammaln(0.5))
    return max(float(nats) / LN2, 0.0)


def _check_order(k: int) -> None:
    if k < 0:
        raise ValueError(f"context order must be >= 0, got {k}")


def kt_codelength(z: SymbolString, k: int = 0) -> CodelengthReport:
    """Adaptive order-k KT codelength of z, counts accumulated left to right per context."""
    return KTEstimator(k).codelength(z)


def kt_entropy(z: SymbolString, k: int = 0) -> float:
    return KTEstimator(k).entropy(z)


class KTEstimator(BaseEstimator):
    """Adaptive order-k context coder with the add-one-half estimator."""

    min_length = 1

    def __init__(self, order: int = 0):
        _check_order(order)
        self.order = order

    @property
    def estimator_id(self) -> str:
        return f"kt({self.order})"

    @observe(estimator=True)
    def codelength(self, z: SymbolString) -> CodelengthReport:
        m, k = z.alphabet.size, self.order
        codes = z.codes
        padded = min(k, codes.size)
        contexts = _dense_contexts(_history(codes, k))
        bits = padded * math.log2(m) + _kt_bits(contexts, codes[padded:], m)
        return CodelengthReport(bits, codes.size, self.estimator_id)


class FrozenKTModel:
    """KT counts accumulated over a training string and then held fixed.

    Coding a second string under the frozen counts costs roughly H(Z) + D(Z||X) per
    symbol for long inputs.
    """

    def __init__(self, train: SymbolString, order: int = 0):
        _check_order(order)
        self.train = train
        self.order = order

    @property
    def estimator_id(self) -> str:
        return f"kt-frozen({self.order})"

    def _padded_bits(self, z: SymbolString) -> float:
        m = z.alphabet.size
        x = self.train.data
        bits = 0.0
        for t in range(min(self.order, len(z))):
            if t < len(x) and x[:t] == z.data[:t]:
                hit = 1.0 if x[t] == z.data[t] else 0.0
                bits -= math.log2((hit + 0.5) / (1.0 + m / 2.0))
            else:
                bits += math.log2(m)
        return bits

    @trace_method
    @observe(estimator=True)
    def codelength(self, z: SymbolString) -> CodelengthReport:
        require_same_alphabet(self.train, z)
        m, k = z.alphabet.size, self.order
        x_codes, z_codes = self.train.codes, z.codes

        x_hist, z_hist = _history(x_codes, k), _history(z_codes, k)
        ids = _dense_contexts(np.vstack([x_hist, z_hist]))
        x_ids, z_ids = ids[: x_hist.shape[0]], ids[x_hist.shape[0]:]
        x_symbols = x_codes[min(k, x_codes.size):]
        z_symbols = z_codes[min(k, z_codes.size):]

        pair_keys, pair_counts = np.unique(x_ids * m + x_symbols, return_counts=True)
        context_totals = np.bincount(x_ids, minlength=int(ids.max()) + 1 if ids.size else 0)

        n_ca = np.zeros(z_symbols.size, dtype=np.float64)
        if pair_keys.size and z_symbols.size:
            query = z_ids * m + z_symbols
            pos = np.minimum(np.searchsorted(pair_keys, query), pair_keys.size - 1)
            found = pair_keys[pos] == query
            n_ca = np.where(found, pair_counts[pos], 0).astype(np.float64)
        n_c = context_totals[z_ids].astype(np.float64) if z_ids.size else np.zeros(0)

        bits = float(-np.sum(np.log2((n_ca + 0.5) / (n_c + m / 2.0))))
        bits += self._padded_bits(z)
        return CodelengthReport(max(bits, 0.0), z_codes.size, self.estimator_id)


def kt_frozen_codelength(z: SymbolString, x: SymbolString, k: int = 0) -> CodelengthReport:
    """Code z under KT counts trained on x and frozen."""
    return FrozenKTModel(x, k).codelength(z)


def _side_information_windows(x: np.ndarray, y: np.ndarray, k: int) -> Tuple[np.ndarray, int]:
    padded = min(k, x.size)
    windows = np.column_stack([y[padded:], _history(x, k)])
    return windows, padded


@observe(estimator=True)
def kt_conditional_codelength(x: SymbolString, y: SymbolString, k: int = 0) -> CodelengthReport:
    """Code x with y as side information: the context of x_t is (y_t, last k symbols of x)."""
    _check_order(k)
    pair = pair_supersymbols(x, y, PairingPolicy.TRUNCATE)
    xs, ys = pair.project(0).codes, pair.project(1).codes
    m = x.alphabet.size

    windows, padded = _side_information_windows(xs, ys, k)
    bits = padded * math.log2(m) + _kt_bits(_dense_contexts(windows), xs[padded:], m)
    return CodelengthReport(bits, xs.size, f"kt-cond({k})")


def conditional_entropy_direct(x: SymbolString, y: SymbolString, k: int = 0) -> float:
    """Per-symbol side-information codelength of x given y; never negative."""
    report = kt_conditional_codelength(x, y, k)
    if report.input_length == 0:
        raise InputTooShort(report.estimator_id, 0, 1)
    return max(report.rate, 0.0)
