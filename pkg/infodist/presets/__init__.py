from pathlib import Path
from typing import Dict, Iterable, List

import yaml

from infodist.sources import SourceSpec, parse_source_spec


def available_profiles() -> List[str]:
    return sorted(p.stem for p in Path(__file__).parent.glob("*.yaml"))


def load_presets(profile: str, required: Iterable[str] = ()) -> Dict[str, str]:
    """Raw source-spec texts of a preset profile, keyed by family name."""
    path = Path(__file__).parent / f"{profile}.yaml"
    if not path.exists():
        raise FileNotFoundError(f"Preset file not found: {path}")
    data = yaml.safe_load(path.read_text(encoding="utf-8"))
    if not isinstance(data, dict):
        raise TypeError(f"YAML root must be a mapping: {path}")
    missing = [k for k in required if k not in data or not isinstance(data[k], str) or not data[k].strip()]
    if missing:
        raise KeyError(f"Missing/empty preset keys in {path}: {missing}")
    return data


def load_preset_sources(profile: str, required: Iterable[str] = ()) -> Dict[str, SourceSpec]:
    return {name: parse_source_spec(text, name=f"{profile}:{name}") for name, text in load_presets(profile, required).items()}
