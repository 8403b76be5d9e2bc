"""Verification presets: named sizes for the property suites."""

import copy

from src.models.enums import VerifyLevel

VERIFY_PRESETS: dict[VerifyLevel, dict] = {
    VerifyLevel.QUICK: {
        "description": "Exhaustive n <= 3, sampled n <= 8, Shannon n <= 10",
        "exhaustive_max_n": 3,
        "sampled_levels": [4, 5, 6, 7, 8],
        "samples": 200,
        "detection_samples": 20,
        "shannon_max_n": 10,
        "equivalence_levels": [5, 6, 7, 8, 9, 10],
        "equivalence_samples": 1000,
    },
    VerifyLevel.FULL: {
        "description": "Exhaustive n <= 4, 10^4 samples at n in {8, 10, 12}, Shannon n <= 14",
        "exhaustive_max_n": 4,
        "sampled_levels": [8, 10, 12],
        "samples": 10_000,
        "detection_samples": 100,
        "shannon_max_n": 14,
        "equivalence_levels": [5, 6, 7, 8, 9, 10],
        "equivalence_samples": 1000,
    },
}


def get_preset_names() -> list[str]:
    return [level.value for level in VERIFY_PRESETS]


def get_preset(name: str) -> dict | None:
    try:
        return VERIFY_PRESETS.get(VerifyLevel(name))
    except ValueError:
        return None


def apply_overrides(data: dict, overrides: dict) -> dict:
    """Deep-merge a config file's values over the preset-backed defaults."""
    merged = copy.deepcopy(data)
    _deep_merge(merged, overrides)
    return merged


def _deep_merge(base: dict, override: dict) -> None:
    """Merge override into base recursively (in place)."""
    for k, v in override.items():
        if k in base and isinstance(base[k], dict) and isinstance(v, dict):
            _deep_merge(base[k], v)
        else:
            base[k] = v
