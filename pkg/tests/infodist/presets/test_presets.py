import itertools

import pytest

from infodist.presets import available_profiles, load_preset_sources, load_presets
from infodist.sources import exact_divergence_rate, exact_entropy_rate


def test_profiles_are_listed():
    assert {"binary", "languages"} <= set(available_profiles())


def test_binary_preset_rates():
    sources = load_preset_sources("binary", required=("uniform", "skewed", "flip"))
    assert exact_entropy_rate(sources["uniform"].source) == pytest.approx(1.0)
    assert exact_entropy_rate(sources["flip"].source) == pytest.approx(0.4689955935892812)
    assert exact_divergence_rate(sources["uniform"].source, sources["skewed"].source) == pytest.approx(0.7370, abs=1e-4)


def test_language_families_are_well_separated():
    sources = {name: spec.source for name, spec in load_preset_sources("languages").items()}
    assert len(sources) == 3
    for a, b in itertools.permutations(sources, 2):
        assert exact_divergence_rate(sources[a], sources[b]) > 1.0


def test_missing_profile():
    with pytest.raises(FileNotFoundError):
        load_presets("nonexistent")


def test_missing_required_key():
    with pytest.raises(KeyError):
        load_presets("binary", required=("uniform", "nonexistent"))


def test_spec_names_carry_the_profile():
    sources = load_preset_sources("binary")
    assert sources["skewed"].name == "binary:skewed"
