from infodist.divergence.conjecture import ConjectureReport, ReferenceRates, concat_conjecture
from infodist.divergence.cross_code import cross_code_divergence
from infodist.divergence.cross_parse import CrossParse, cross_parse, zm_divergence
from infodist.divergence.estimate import DivergenceEstimate
from infodist.divergence.exceptions import DivergenceError, EmptyReference
from infodist.divergence.suffix_automaton import SuffixAutomaton

__all__ = [
    "ConjectureReport",
    "ReferenceRates",
    "concat_conjecture",
    "cross_code_divergence",
    "CrossParse",
    "cross_parse",
    "zm_divergence",
    "DivergenceEstimate",
    "DivergenceError",
    "EmptyReference",
    "SuffixAutomaton",
]
