from infodist.distances.exceptions import DegenerateDenominator, DistanceError, DuplicateLabel, TooFewItems
from infodist.distances.matrix import Corpus, DistanceMatrix, distance_matrix
from infodist.distances.pairwise import (
    MIN_ENTROPY,
    PairDistance,
    e1_distance,
    e2_distance,
    kl_sym_distance,
    pair_distance,
)
from infodist.distances.spec import ConditionalMode, DistanceSpec, DivergenceMethod, Metric

__all__ = [
    "DegenerateDenominator",
    "DistanceError",
    "DuplicateLabel",
    "TooFewItems",
    "Corpus",
    "DistanceMatrix",
    "distance_matrix",
    "MIN_ENTROPY",
    "PairDistance",
    "e1_distance",
    "e2_distance",
    "kl_sym_distance",
    "pair_distance",
    "ConditionalMode",
    "DistanceSpec",
    "DivergenceMethod",
    "Metric",
]
