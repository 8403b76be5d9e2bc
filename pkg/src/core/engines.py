"""Complexity engines: brute-force oracle, fast descent, scheme replay, witnesses."""

from __future__ import annotations

import random
from collections.abc import Iterable

from src.core.errors import DomainError
from src.core.thinning import detect_final
from src.core.words import (
    apply_operator,
    as_rank,
    iterate_rank1,
    reduce_to_minimal_period,
    rotate_left,
)
from src.models.enums import Terminal
from src.models.records import Certificate
from src.models.scheme import SchemeStep, SchemeTrace
from src.models.word import OperatorRank, PeriodicWord

RANK_ONE = OperatorRank(1)


def complexity_naive(word: PeriodicWord) -> tuple[int, SchemeTrace]:
    """Apply F(., 1) until the zero word; at most 2^n steps."""
    steps = []
    current = word
    while not current.is_zero:
        current = apply_operator(current, RANK_ONE)
        steps.append(SchemeStep(rank=RANK_ONE, result=current))
    trace = SchemeTrace(start=word, steps=tuple(steps), terminal=Terminal.ZERO)
    return len(steps), trace


def complexity_naive_count(word: PeriodicWord) -> int:
    """Same count as complexity_naive, stepping the packed int without building the chain."""
    size = word.length
    value = word.value
    steps = 0
    while value:
        value ^= rotate_left(value, 1, size)
        steps += 1
    return steps


def complexity_fast(word: PeriodicWord) -> tuple[int, Certificate]:
    """Reduce, try the final-word detector, otherwise descend by half a period.

    A minimal-period word of length 2^p has 2^(p-1) < A <= 2^p, so the
    rank-2^(p-1) step never overshoots and at most n operators are applied.
    """
    total = 0
    ranks: list[int] = []
    current = word
    while True:
        reduced, _ = reduce_to_minimal_period(current)
        if reduced.is_zero:
            return total, Certificate(ranks=ranks, final_complexity=0, total=total)

        detection = detect_final(reduced)
        if detection is not None:
            total += detection.complexity
            cert = Certificate(ranks=ranks, final_complexity=detection.complexity, total=total)
            return total, cert

        h = reduced.length >> 1
        current = apply_operator(reduced, h)
        ranks.append(h)
        total += h


def run_scheme(word: PeriodicWord, ranks: Iterable[OperatorRank | int]) -> SchemeTrace:
    """Replay the given ranks in order and classify the last word."""
    steps = []
    current = word
    for rank in ranks:
        rank = as_rank(rank)
        current = apply_operator(current, rank)
        steps.append(SchemeStep(rank=rank, result=current))

    if current.is_zero:
        return SchemeTrace(start=word, steps=tuple(steps), terminal=Terminal.ZERO)
    detection = detect_final(current)
    terminal = Terminal.FINAL if detection is not None else Terminal.OPEN
    return SchemeTrace(start=word, steps=tuple(steps), terminal=terminal, detection=detection)


def check_scheme_equivalence(word: PeriodicWord, k: int) -> bool:
    """2^k rank-1 steps land where one rank-2^k step does."""
    if not 0 <= k <= word.n:
        raise DomainError(f"level k={k} outside 0..{word.n}")
    return iterate_rank1(word, 1 << k) == apply_operator(word, 1 << k)


# ── Witness words ────────────────────────────────────────────────────────────


def random_word(n: int, rng: random.Random) -> PeriodicWord:
    return PeriodicWord(rng.getrandbits(1 << n), n)


def synthesize_word(n: int, complexity: int, seed: int) -> PeriodicWord:
    """A word of length 2^n with the requested complexity, deterministic in the inputs.

    Start from a random odd word (A = 2^n) and apply rank 2^k once for every
    set bit 2^k of the deficiency 2^n - A.
    """
    if n < 0:
        raise DomainError(f"word level must be non-negative, got n={n}")
    size = 1 << n
    if not 0 <= complexity <= size:
        raise DomainError(f"complexity {complexity} outside 0..{size}")
    if complexity == 0:
        return PeriodicWord.zeros(n)

    rng = random.Random(f"{n}:{complexity}:{seed}")
    value = rng.getrandbits(size)
    if not value.bit_count() & 1:
        value ^= 1
    word = PeriodicWord(value, n)

    deficiency = size - complexity
    for k in range(n):
        if deficiency >> k & 1:
            word = apply_operator(word, 1 << k)
    return word
