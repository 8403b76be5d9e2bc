"""Serializable result records (rendered as JSON by the CLI)."""

from __future__ import annotations

from typing import Any

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.models.enums import CheckStatus, Subcase


class Certificate(BaseModel):
    """Descent ranks plus the detected final value: total = sum(ranks) + final."""

    model_config = ConfigDict(frozen=True)

    ranks: list[int] = Field(default_factory=list)
    final_complexity: int
    total: int

    @model_validator(mode="after")
    def _check_total(self) -> Certificate:
        if self.total != sum(self.ranks) + self.final_complexity:
            raise ValueError("certificate total does not match its ranks and final value")
        return self


class ComplexityValue(BaseModel):
    """Binary view of a complexity A: digits, weight, runs and trailing zeros."""

    model_config = ConfigDict(frozen=True)

    value: int
    n: int
    digits: list[int]
    nu: int
    trailing_zeros: int
    runs: list[tuple[int, int]]

    @property
    def max_run(self) -> int:
        return max((length for _, length in self.runs), default=0)

    def render(self) -> str:
        return "".join(str(d) for d in self.digits)


class Plan(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: int
    n: int
    subcase: Subcase
    ranks: list[int] = Field(default_factory=list)
    trajectory: list[int] = Field(default_factory=list)
    final_value: int

    @property
    def count(self) -> int:
        return len(self.ranks)


class ShannonReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int
    max_odd: int
    max_even: int
    witness_odd: int | None = None
    witness_even: int | None = None
    bound_odd: int
    bound_even: int
    mismatches: list[int] = Field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return not self.mismatches

    @property
    def within_bounds(self) -> bool:
        return self.max_odd <= self.bound_odd and self.max_even <= self.bound_even


class BenchReport(BaseModel):
    bits: int
    samples: int
    seed: int
    value_range: tuple[int, int]
    naive_median_ns: int
    fast_median_ns: int

    @property
    def ratio(self) -> float:
        return self.naive_median_ns / max(self.fast_median_ns, 1)


class PropertyResult(BaseModel):
    name: str
    status: CheckStatus
    checked: int = 0
    detail: str = ""
    witnesses: list[str] = Field(default_factory=list)


class OutputRecord(BaseModel):
    """What every command prints with --json."""

    command: str
    inputs: dict[str, Any] = Field(default_factory=dict)
    results: list[dict[str, Any]] = Field(default_factory=list)
    timing_ns: int | None = None
