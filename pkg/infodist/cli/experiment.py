"""Estimator-versus-oracle sweeps over lengths and seeds."""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np

from infodist.divergence import cross_code_divergence, zm_divergence
from infodist.estimators import kt_entropy, lz78_entropy
from infodist.sources import MarkovSource, exact_divergence_rate, exact_entropy_rate, sample
from utils.logger import get_logger
from utils.observability import observe

logger = get_logger(__name__)

ENTROPY_ESTIMATORS = ("kt", "lz78")
DIVERGENCE_METHODS = ("cross-code", "zm")
COLUMNS = ("source", "reference", "quantity", "estimator", "length", "seed", "estimate", "oracle", "error")


@dataclass(frozen=True)
class ExperimentRow:
    source: str
    reference: str
    quantity: str
    estimator: str
    length: int
    seed: int
    estimate: float
    oracle: float

    @property
    def error(self) -> float:
        return self.estimate - self.oracle


@dataclass(frozen=True)
class Trial:
    quantity: str
    source: str
    reference: str
    length: int
    seed: int


def derive_seed(base: int, *keys: int) -> int:
    """Independent, reproducible seed for one (trial, role) combination."""
    return int(np.random.SeedSequence([base, *keys]).generate_state(1)[0])


def _entropy_rows(trial: Trial, src: MarkovSource, sample_seed: int, estimators: Sequence[str]) -> List[ExperimentRow]:
    z = sample(src, trial.length, sample_seed)
    oracle = exact_entropy_rate(src)
    rows = []
    for name in estimators:
        if name == "kt":
            label, estimate = f"kt({src.order})", kt_entropy(z, src.order)
        else:
            label, estimate = "lz78", lz78_entropy(z)
        rows.append(ExperimentRow(trial.source, "-", "entropy", label, trial.length, trial.seed, estimate, oracle))
    return rows


def _divergence_rows(
    trial: Trial, z_src: MarkovSource, x_src: MarkovSource, seeds: Tuple[int, int], methods: Sequence[str]
) -> List[ExperimentRow]:
    oracle = exact_divergence_rate(z_src, x_src)
    z = sample(z_src, trial.length, seeds[0])
    x = sample(x_src, trial.length, seeds[1])
    k = max(z_src.order, x_src.order)
    rows = []
    for method in methods:
        if method == "cross-code":
            label, estimate = f"cross-code({k})", cross_code_divergence(z, x, k).value
        else:
            label, estimate = "zm", zm_divergence(z, x).value
        rows.append(ExperimentRow(trial.source, trial.reference, "divergence", label, trial.length, trial.seed, estimate, oracle))
    return rows


def _run_trial(task: tuple) -> List[ExperimentRow]:
    trial, sources, base_seed, estimators, methods = task
    names = sorted(sources)
    if trial.quantity == "entropy":
        seed = derive_seed(base_seed, trial.seed, trial.length, names.index(trial.source), 0)
        return _entropy_rows(trial, sources[trial.source], seed, estimators)
    z_seed = derive_seed(base_seed, trial.seed, trial.length, names.index(trial.source), 1)
    x_seed = derive_seed(base_seed, trial.seed, trial.length, names.index(trial.reference), 2)
    return _divergence_rows(trial, sources[trial.source], sources[trial.reference], (z_seed, x_seed), methods)


def plan_trials(sources: Dict[str, MarkovSource], lengths: Sequence[int], seeds: int, divergence: bool = True) -> List[Trial]:
    """Entropy trials for every source; divergence trials for every ordered pair over one alphabet
    with a finite oracle value (a source against itself included)."""
    names = sorted(sources)
    trials: List[Trial] = []
    for n in lengths:
        for s in range(seeds):
            trials.extend(Trial("entropy", name, "-", n, s) for name in names)
            if not divergence:
                continue
            for a in names:
                for b in names:
                    if sources[a].alphabet != sources[b].alphabet:
                        continue
                    if math.isinf(exact_divergence_rate(sources[a], sources[b])):
                        logger.info("skipped_infinite_divergence", source=a, reference=b)
                        continue
                    trials.append(Trial("divergence", a, b, n, s))
    return trials


@observe(root=True)
def run_experiment(
    sources: Dict[str, MarkovSource],
    lengths: Sequence[int],
    seeds: int = 3,
    base_seed: int = 0,
    estimators: Sequence[str] = ENTROPY_ESTIMATORS,
    methods: Sequence[str] = DIVERGENCE_METHODS,
    jobs: int = 1,
) -> List[ExperimentRow]:
    trials = plan_trials(sources, lengths, seeds, divergence=bool(methods))
    tasks = [(t, sources, base_seed, tuple(estimators), tuple(methods)) for t in trials]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_run_trial, tasks))
    else:
        chunks = [_run_trial(t) for t in tasks]
    rows = [row for chunk in chunks for row in chunk]
    logger.info("experiment_finished", trials=len(trials), rows=len(rows), jobs=jobs)
    return rows


def format_table(rows: Sequence[ExperimentRow], precision: int = 6) -> str:
    lines = ["\t".join(COLUMNS)]
    for r in rows:
        lines.append(
            "\t".join(
                [r.source, r.reference, r.quantity, r.estimator, str(r.length), str(r.seed)]
                + [f"{v:.{precision}f}" for v in (r.estimate, r.oracle, r.error)]
            )
        )
    return "\n".join(lines) + "\n"
