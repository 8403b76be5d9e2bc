"""Thinned-out words, their union, the parity tree and final-word detection."""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from src.core.errors import DomainError
from src.core.words import reduce_to_minimal_period
from src.models.scheme import FinalDetection, ParityTree
from src.models.word import PeriodicWord


def thin(word: PeriodicWord, m: int, i: int) -> PeriodicWord:
    """Every 2^m-th position of w starting at offset i; length 2^(n - m)."""
    if not 0 <= m <= word.n:
        raise DomainError(f"level m={m} outside 0..{word.n}")
    if not 0 <= i < (1 << m):
        raise DomainError(f"offset i={i} outside 0..{(1 << m) - 1}")
    step = 1 << m
    return PeriodicWord.from_bits(word.bit(j) for j in range(i, word.length, step))


def union_thinned(parts: Iterable[tuple[int, PeriodicWord]], m: int) -> PeriodicWord:
    """Reassemble w from its 2^m thinned-out words at level m."""
    if m < 0:
        raise DomainError(f"level m={m} is negative")
    by_offset: dict[int, PeriodicWord] = {}
    for offset, part in parts:
        if offset in by_offset:
            raise DomainError(f"duplicate offset {offset}")
        by_offset[offset] = part

    step = 1 << m
    if sorted(by_offset) != list(range(step)):
        raise DomainError(f"level {m} union needs offsets 0..{step - 1}, got {sorted(by_offset)}")
    levels = {part.n for part in by_offset.values()}
    if len(levels) != 1:
        raise DomainError(f"thinned-out words have inconsistent lengths: {sorted(levels)}")

    part_size = 1 << levels.pop()
    bits = [0] * (part_size * step)
    for offset, part in by_offset.items():
        for r, b in enumerate(part.bits):
            bits[offset + r * step] = b
    return PeriodicWord.from_bits(bits)


# ── Parity tree ──────────────────────────────────────────────────────────────


def _fold(value: int, n: int) -> Iterator[tuple[int, int]]:
    """Yield (m, packed level m) for m = n-1 .. 0.

    Level m is the XOR of the two halves of level m + 1, so entry i of level m
    is entry i XOR entry i + 2^m of the level above: 2^m XORs per fold.
    """
    for m in range(n - 1, -1, -1):
        half = 1 << m
        value = (value >> half) ^ (value & ((1 << half) - 1))
        yield m, value


def _unpack(value: int, width: int) -> tuple[int, ...]:
    return tuple((value >> (width - 1 - i)) & 1 for i in range(width))


def parity_tree(word: PeriodicWord, *, reference: bool = False) -> ParityTree:
    """All thinned-out-word parities, built bottom-up with 2^n - 1 XORs."""
    if reference:
        return _parity_tree_reference(word)

    levels: list[tuple[int, ...]] = [word.bits]
    xor_count = 0
    for m, packed in _fold(word.value, word.n):
        levels.append(_unpack(packed, 1 << m))
        xor_count += 1 << m
    return ParityTree(levels=tuple(reversed(levels)), xor_count=xor_count)


def _parity_tree_reference(word: PeriodicWord) -> ParityTree:
    """Instrumented path: one counted XOR per tree entry."""
    above = list(word.bits)
    levels = [tuple(above)]
    xor_count = 0
    for m in range(word.n - 1, -1, -1):
        half = 1 << m
        below = []
        for i in range(half):
            below.append(above[i] ^ above[i + half])
            xor_count += 1
        levels.append(tuple(below))
        above = below
    return ParityTree(levels=tuple(reversed(levels)), xor_count=xor_count)


# ── Final words ──────────────────────────────────────────────────────────────


def detect_final(word: PeriodicWord) -> FinalDetection | None:
    """All-odd level m of the minimal period 2^p means A = 2^p - 2^m + 1.

    Levels below an all-odd level are all-even, so the first hit from the top
    is the only one. No all-odd level means the word is not final.
    """
    reduced, _ = reduce_to_minimal_period(word)
    if reduced.is_zero:
        return None
    p = reduced.n
    if p == 0:
        return FinalDetection(level=0, complexity=1, period_n=0)

    for m, packed in _fold(reduced.value, p):
        if packed == (1 << (1 << m)) - 1:
            return FinalDetection(level=m, complexity=(1 << p) - (1 << m) + 1, period_n=p)
    return None
