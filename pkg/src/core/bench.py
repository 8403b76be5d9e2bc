"""Median wall time of the brute-force oracle against the fast engine."""

from __future__ import annotations

import random
import statistics
import time
from collections.abc import Callable

from src.core.engines import complexity_fast, complexity_naive_count, synthesize_word
from src.core.errors import DomainError
from src.models.records import BenchReport
from src.models.word import PeriodicWord


def _time_ns(fn: Callable[[PeriodicWord], object], word: PeriodicWord) -> int:
    start = time.perf_counter_ns()
    fn(word)
    return time.perf_counter_ns() - start


def bench_words(bits: int, samples: int, seed: int) -> tuple[list[PeriodicWord], tuple[int, int]]:
    """Seeded words with A in (2^(n-1) + 2^(n-2), 2^n], where the oracle works hardest."""
    size = 1 << bits
    low = size // 2 + size // 4 + 1 if bits >= 2 else 1
    rng = random.Random(f"bench:{bits}:{seed}")
    words = [synthesize_word(bits, rng.randint(low, size), rng.getrandbits(32)) for _ in range(samples)]
    return words, (low, size)


def run_bench(bits: int, samples: int, seed: int) -> BenchReport:
    if samples < 1:
        raise DomainError(f"samples must be at least 1, got {samples}")
    if bits < 0:
        raise DomainError(f"bits must be non-negative, got {bits}")

    words, value_range = bench_words(bits, samples, seed)
    naive_ns = [_time_ns(complexity_naive_count, w) for w in words]
    fast_ns = [_time_ns(complexity_fast, w) for w in words]
    return BenchReport(
        bits=bits,
        samples=samples,
        seed=seed,
        value_range=value_range,
        naive_median_ns=int(statistics.median(naive_ns)),
        fast_median_ns=int(statistics.median(fast_ns)),
    )
