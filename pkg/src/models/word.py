"""Value types for cyclic binary words and operator ranks."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from src.core.errors import DomainError


@dataclass(frozen=True, slots=True)
class PeriodicWord:
    """One period of the infinite word (w), packed into an int.

    Position 0 (the x_1 of the text form) is the most significant of the
    ``2**n`` bits, so ``int("0b1011", 0)`` is already the packed value.
    """

    value: int
    n: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise DomainError(f"word level must be non-negative, got n={self.n}")
        if not 0 <= self.value < (1 << (1 << self.n)):
            raise DomainError(f"value does not fit in 2^{self.n} bits")

    @classmethod
    def zeros(cls, n: int) -> PeriodicWord:
        return cls(0, n)

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> PeriodicWord:
        bits = tuple(bits)
        size = len(bits)
        if size == 0 or size & (size - 1):
            raise DomainError(f"word length {size} is not a power of two")
        value = 0
        for b in bits:
            if b not in (0, 1):
                raise DomainError(f"bit values must be 0 or 1, got {b!r}")
            value = (value << 1) | b
        return cls(value, size.bit_length() - 1)

    @property
    def length(self) -> int:
        return 1 << self.n

    @property
    def bits(self) -> tuple[int, ...]:
        size = self.length
        return tuple((self.value >> (size - 1 - j)) & 1 for j in range(size))

    def bit(self, j: int) -> int:
        """Bit at cyclic position j."""
        size = self.length
        return (self.value >> (size - 1 - (j % size))) & 1

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    def is_periodic(self) -> bool:
        """True when a shorter power-of-two period generates the same word."""
        if self.n == 0:
            return False
        half = self.length >> 1
        return (self.value >> half) == (self.value & ((1 << half) - 1))

    def doubled(self) -> PeriodicWord:
        """The same infinite word stored over two periods."""
        return PeriodicWord((self.value << self.length) | self.value, self.n + 1)

    def __str__(self) -> str:
        return f"0b{self.value:0{self.length}b}"


@dataclass(frozen=True, slots=True)
class OperatorRank:
    """Shift distance h = 2^k of the operator F(., h)."""

    rank: int

    def __post_init__(self) -> None:
        if self.rank < 1 or self.rank & (self.rank - 1):
            raise DomainError(f"rank must be a power of two, got {self.rank}")

    @classmethod
    def of_level(cls, k: int) -> OperatorRank:
        if k < 0:
            raise DomainError(f"rank level must be non-negative, got k={k}")
        return cls(1 << k)

    @property
    def k(self) -> int:
        return self.rank.bit_length() - 1

    def __str__(self) -> str:
        return str(self.rank)
