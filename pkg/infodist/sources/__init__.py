from infodist.sources.exceptions import (
    InvalidTransition,
    MarginalNotMarkov,
    NotIrreducible,
    SourceError,
    SourceSpecError,
)
from infodist.sources.markov import (
    ConditionalDirection,
    JointMarkovSource,
    MarkovSource,
    block_distribution,
    exact_conditional_entropy_rate,
    exact_divergence_rate,
    exact_entropy_rate,
    exact_joint_entropy_rate,
    sample,
    sample_codes,
    sample_pair,
    sample_super,
    stationary_distribution,
)
from infodist.sources.spec_file import SourceSpec, format_source_spec, load_source_spec, parse_source_spec

__all__ = [
    "InvalidTransition",
    "MarginalNotMarkov",
    "NotIrreducible",
    "SourceError",
    "SourceSpecError",
    "ConditionalDirection",
    "JointMarkovSource",
    "MarkovSource",
    "block_distribution",
    "exact_conditional_entropy_rate",
    "exact_divergence_rate",
    "exact_entropy_rate",
    "exact_joint_entropy_rate",
    "sample",
    "sample_codes",
    "sample_pair",
    "sample_super",
    "stationary_distribution",
    "SourceSpec",
    "format_source_spec",
    "load_source_spec",
    "parse_source_spec",
]
