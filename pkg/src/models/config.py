from pydantic import BaseModel, Field

from src.models.enums import VerifyLevel


class VerifyConfig(BaseModel):
    exhaustive_max_n: int = 3
    sampled_levels: list[int] = Field(default_factory=lambda: [4, 5, 6, 7, 8])
    samples: int = 200
    detection_samples: int = 20
    shannon_max_n: int = 10
    equivalence_levels: list[int] = Field(default_factory=lambda: [5, 6, 7, 8, 9, 10])
    equivalence_samples: int = 1000


class BenchConfig(BaseModel):
    bits: int = 14
    samples: int = 100


class ShannonConfig(BaseModel):
    min_n: int = 5
    max_n: int = 14


def _default_levels() -> dict[VerifyLevel, VerifyConfig]:
    from src.presets import VERIFY_PRESETS

    return {level: VerifyConfig.model_validate(data) for level, data in VERIFY_PRESETS.items()}


class ArnoldConfig(BaseModel):
    seed: int = 7
    bench: BenchConfig = Field(default_factory=BenchConfig)
    shannon: ShannonConfig = Field(default_factory=ShannonConfig)
    verify: dict[VerifyLevel, VerifyConfig] = Field(default_factory=_default_levels)
