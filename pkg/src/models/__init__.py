from src.models.word import PeriodicWord, OperatorRank
from src.models.scheme import ParityTree, FinalDetection, SchemeStep, SchemeTrace
from src.models.records import (
    Certificate,
    ComplexityValue,
    Plan,
    ShannonReport,
    BenchReport,
    PropertyResult,
    OutputRecord,
)
from src.models.config import ArnoldConfig, VerifyConfig, BenchConfig, ShannonConfig
from src.models.enums import (
    Parity,
    StepCase,
    Subcase,
    Terminal,
    Engine,
    VerifyLevel,
    CheckStatus,
)

__all__ = [
    "PeriodicWord",
    "OperatorRank",
    "ParityTree",
    "FinalDetection",
    "SchemeStep",
    "SchemeTrace",
    "Certificate",
    "ComplexityValue",
    "Plan",
    "ShannonReport",
    "BenchReport",
    "PropertyResult",
    "OutputRecord",
    "ArnoldConfig",
    "VerifyConfig",
    "BenchConfig",
    "ShannonConfig",
    "Parity",
    "StepCase",
    "Subcase",
    "Terminal",
    "Engine",
    "VerifyLevel",
    "CheckStatus",
]
