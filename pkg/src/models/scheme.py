"""Parity trees, final-word detections and operator chains."""

from __future__ import annotations

from dataclasses import dataclass

from src.models.enums import Terminal
from src.models.word import OperatorRank, PeriodicWord


@dataclass(frozen=True, slots=True)
class ParityTree:
    """Parities of every thinned-out word of a length-2^n word.

    ``levels[m][i]`` is the parity of the thinned-out word with stride
    2^m starting at offset i; ``levels[n]`` holds the bits.
    """

    levels: tuple[tuple[int, ...], ...]
    xor_count: int

    @property
    def n(self) -> int:
        return len(self.levels) - 1

    def level(self, m: int) -> tuple[int, ...]:
        return self.levels[m]

    def is_all_odd(self, m: int) -> bool:
        return all(self.levels[m])

    def odd_levels(self) -> list[int]:
        """Levels below the word itself whose entries are all odd."""
        top = max(self.n, 1)
        return [m for m in range(top) if self.is_all_odd(m)]

    def render_lines(self) -> list[str]:
        return [f"{m}: {' '.join(str(p) for p in entries)}" for m, entries in enumerate(self.levels)]


@dataclass(frozen=True, slots=True)
class FinalDetection:
    """An all-odd level m of the minimal period 2^p: complexity 2^p - 2^m + 1."""

    level: int
    complexity: int
    period_n: int


@dataclass(frozen=True, slots=True)
class SchemeStep:
    rank: OperatorRank
    result: PeriodicWord


@dataclass(frozen=True, slots=True)
class SchemeTrace:
    start: PeriodicWord
    steps: tuple[SchemeStep, ...]
    terminal: Terminal
    detection: FinalDetection | None = None

    @property
    def end(self) -> PeriodicWord:
        return self.steps[-1].result if self.steps else self.start

    @property
    def ranks(self) -> list[int]:
        return [step.rank.rank for step in self.steps]

    @property
    def words(self) -> list[PeriodicWord]:
        return [self.start, *(step.result for step in self.steps)]

    @property
    def length(self) -> int:
        """Number of words in the chain, the scheme length s."""
        return len(self.steps) + 1
