"""Pairwise distance matrices over labeled corpora."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from infodist.alphabet import SymbolString, require_same_alphabet
from infodist.distances.exceptions import DuplicateLabel, TooFewItems
from infodist.distances.pairwise import PairDistance, pair_distance
from infodist.distances.spec import DistanceSpec
from utils.logger import get_logger
from utils.observability import observe

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """Square matrix of distances indexed by `labels`.

    Matrices built from a corpus carry the spec, the input lengths, the effective
    length used per pair and a per-cell flag for values clamped at 0. Matrices read
    from files carry only labels and values.
    """

    labels: Tuple[str, ...]
    values: np.ndarray
    spec: Optional[DistanceSpec] = None
    input_lengths: Tuple[int, ...] = ()
    effective_n: Optional[np.ndarray] = None
    clamped: Optional[np.ndarray] = None
    raw: Optional[np.ndarray] = field(default=None, repr=False)

    def __post_init__(self) -> None:
        values = np.array(self.values, dtype=np.float64)
        r = len(self.labels)
        if values.shape != (r, r):
            raise ValueError(f"values must be {r}x{r} for {r} labels, got shape {values.shape}")
        if len(set(self.labels)) != r:
            raise DuplicateLabel(f"matrix labels must be unique: {list(self.labels)}")
        values.setflags(write=False)
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "values", values)

    @property
    def size(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def get(self, a: str, b: str) -> float:
        return float(self.values[self.index(a), self.index(b)])

    def is_symmetric(self, tolerance: float = 0.0) -> bool:
        return bool(np.all(np.abs(self.values - self.values.T) <= tolerance))

    def clamped_cells(self) -> List[Tuple[str, str]]:
        if self.clamped is None:
            return []
        return [(self.labels[i], self.labels[j]) for i, j in zip(*np.nonzero(np.triu(self.clamped)))]

    def permuted(self, order: Sequence[int]) -> "DistanceMatrix":
        idx = np.asarray(order)
        return DistanceMatrix(tuple(self.labels[i] for i in order), self.values[np.ix_(idx, idx)])


Corpus = Sequence[Tuple[str, SymbolString]]


def _evaluate(task: Tuple[int, int, SymbolString, SymbolString, DistanceSpec]) -> Tuple[int, int, PairDistance]:
    i, j, x, y, spec = task
    return i, j, pair_distance(x, y, spec)


def _check_corpus(corpus: Corpus) -> None:
    if len(corpus) < 2:
        raise TooFewItems(2, len(corpus))
    labels = [label for label, _ in corpus]
    if len(set(labels)) != len(labels):
        raise DuplicateLabel(f"corpus labels must be unique: {labels}")
    first = corpus[0][1]
    for _, z in corpus[1:]:
        require_same_alphabet(first, z)


@observe(root=True)
def distance_matrix(corpus: Corpus, spec: DistanceSpec, jobs: int = 1) -> DistanceMatrix:
    """Evaluate every unordered pair (diagonal included) once and mirror it.

    With jobs > 1 pairs are spread over worker processes; results are placed by
    index so the matrix does not depend on completion order.
    """
    _check_corpus(corpus)
    r = len(corpus)
    tasks = [(i, j, corpus[i][1], corpus[j][1], spec) for i in range(r) for j in range(i, r)]

    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_evaluate, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        results = [_evaluate(task) for task in tasks]

    values = np.zeros((r, r))
    raw = np.zeros((r, r))
    effective_n = np.zeros((r, r), dtype=np.int64)
    clamped = np.zeros((r, r), dtype=bool)
    cells: Dict[Tuple[int, int], PairDistance] = {(i, j): d for i, j, d in results}
    for (i, j), d in cells.items():
        for a, b in ((i, j), (j, i)):
            values[a, b] = d.value
            raw[a, b] = d.raw
            effective_n[a, b] = d.effective_n
            clamped[a, b] = d.clamped

    matrix = DistanceMatrix(
        labels=tuple(label for label, _ in corpus),
        values=values,
        spec=spec,
        input_lengths=tuple(len(z) for _, z in corpus),
        effective_n=effective_n,
        clamped=clamped,
        raw=raw,
    )
    logger.info(
        "distance_matrix_built",
        items=r,
        metric=spec.metric.value,
        estimator=spec.estimator.estimator_id,
        clamped_cells=len(matrix.clamped_cells()),
        jobs=jobs,
    )
    return matrix
