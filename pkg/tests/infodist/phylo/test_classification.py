"""Trees over synthetic corpora: samples of the same source family should end up as cherries."""
import pytest

from infodist.distances import DistanceSpec, distance_matrix
from infodist.estimators import EstimatorChoice
from infodist.phylo import neighbor_joining, splits
from infodist.presets import load_preset_sources
from infodist.sources import sample

FAMILIES = load_preset_sources("languages")
N = 2_000
SEEDS = 30
# the cycle family is uniform at order 0, so contexts are needed to tell it apart
ORDER_1 = EstimatorChoice(order=1)


def family_corpus(seed: int):
    corpus = []
    for f, (name, spec) in enumerate(sorted(FAMILIES.items())):
        for i in range(2):
            corpus.append((f"{name}{i}", sample(spec.source, N, seed * 1000 + f * 10 + i)))
    return corpus


def cherries_match_families(tree) -> bool:
    labels = frozenset(tree.leaf_labels())
    found = splits(tree)
    for name in FAMILIES:
        pair = frozenset({f"{name}0", f"{name}1"})
        if pair not in found and labels - pair not in found:
            return False
    return True


@pytest.mark.slow
@pytest.mark.parametrize(
    "spec",
    [
        DistanceSpec(metric="kl-sym-max", method="cross-code", estimator=ORDER_1),
        DistanceSpec(metric="kl-sym-sum", method="cross-code", estimator=ORDER_1),
    ],
    ids=lambda spec: spec.describe(),
)
def test_families_form_cherries(spec):
    hits = sum(cherries_match_families(neighbor_joining(distance_matrix(family_corpus(seed), spec))) for seed in range(SEEDS))
    assert hits >= 28
