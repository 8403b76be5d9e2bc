"""Value-space model: final values, rank steps, minimal plans and the Shannon function.

Applying F(., 2^k) to a word of complexity A yields complexity max(A - 2^k, 0),
so transformation counts can be computed on integers alone.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from math import isqrt

from src.core.errors import DomainError
from src.models.enums import StepCase, Subcase
from src.models.records import ComplexityValue, Plan, ShannonReport

UNREACHABLE = -1
MAX_BFS_N = 16


# ── Binary view ──────────────────────────────────────────────────────────────


def nu(value: int) -> int:
    return value.bit_count()


def trailing_zeros(value: int) -> int:
    return (value & -value).bit_length() - 1 if value else 0


def runs(value: int) -> list[tuple[int, int]]:
    """Maximal runs of 1s as (top position i, length l), topmost first; bit 0 excluded."""
    found = []
    i = value.bit_length() - 1
    while i >= 1:
        if value >> i & 1:
            top = i
            while i >= 1 and value >> i & 1:
                i -= 1
            found.append((top, top - i))
        else:
            i -= 1
    return found


def _top_max_run(value: int) -> tuple[int, int] | None:
    best = None
    for top, length in runs(value):
        if best is None or length > best[1]:
            best = (top, length)
    return best


def complexity_value(value: int, n: int) -> ComplexityValue:
    if value < 0 or n < 0:
        raise DomainError(f"complexity and width must be non-negative, got A={value}, n={n}")
    width = max(n, value.bit_length())
    digits = [(value >> k) & 1 for k in range(width - 1, -1, -1)]
    return ComplexityValue(
        value=value,
        n=n,
        digits=digits,
        nu=nu(value),
        trailing_zeros=trailing_zeros(value),
        runs=runs(value),
    )


# ── Finals and single steps ──────────────────────────────────────────────────


@lru_cache(maxsize=None)
def _finals(n: int) -> frozenset[int]:
    values = {1}
    for p in range(1, n + 1):
        for m in range(p):
            values.add((1 << p) - (1 << m) + 1)
    return frozenset(values)


def finals_set(n: int) -> list[int]:
    """Values 2^p - 2^m + 1 for 1 <= p <= n, 0 <= m < p, plus 1; descending."""
    if n < 0:
        raise DomainError(f"width must be non-negative, got n={n}")
    return sorted(_finals(n), reverse=True)


def is_final(value: int, n: int) -> bool:
    return value in _finals(n)


def value_step(value: int, k: int, n: int) -> tuple[int, StepCase]:
    """One F(., 2^k) in value space; saturates at 0."""
    if not 0 <= k <= n:
        raise DomainError(f"rank level k={k} outside 0..{n}")
    case = StepCase.CLEAR_BIT if value >> k & 1 else StepCase.BORROW
    return max(value - (1 << k), 0), case


# ── Minimal transformation counts ────────────────────────────────────────────


def _check_value(value: int, n: int) -> None:
    if n < 0:
        raise DomainError(f"width must be non-negative, got n={n}")
    if not 1 <= value <= (1 << n):
        raise DomainError(f"complexity {value} outside 1..{1 << n}")


def _odd_count(value: int) -> int:
    best = _top_max_run(value)
    return nu(value) - (best[1] if best else 0) - 1


def min_ops(value: int, n: int) -> int:
    """Closed-form transformation count.

    Odd A: nu(A) - l - 1 with l the longest run above bit 0.
    Even A: the cheaper of clearing all but the leading bit (nu(A) - 1) and
    one rank-1 step followed by the odd count of A - 1.
    """
    _check_value(value, n)
    if is_final(value, n):
        return 0
    if value & 1:
        return _odd_count(value)
    return min(nu(value) - 1, 1 + _odd_count(value - 1))


def _bits_desc(value: int) -> list[int]:
    return [1 << k for k in range(value.bit_length() - 1, -1, -1) if value >> k & 1]


def _odd_ranks(value: int) -> list[int]:
    """Clear every set bit outside the topmost longest run and bit 0."""
    keep = 1
    best = _top_max_run(value)
    if best is not None:
        top, length = best
        keep |= ((1 << length) - 1) << (top - length + 1)
    return _bits_desc(value & ~keep)


def plan_ranks(value: int, n: int) -> Plan:
    """Minimal rank sequence to a final value. Even ties go to the rank-1 route."""
    _check_value(value, n)
    if is_final(value, n):
        subcase, ranks = Subcase.ALREADY_FINAL, []
    elif value & 1:
        subcase, ranks = Subcase.ODD, _odd_ranks(value)
    else:
        clear = _bits_desc(value)[1:]
        shift = [1, *_odd_ranks(value - 1)]
        if len(shift) <= len(clear):
            subcase, ranks = Subcase.EVEN_SHIFT, shift
        else:
            subcase, ranks = Subcase.EVEN_CLEAR, clear

    trajectory = []
    current = value
    for rank in ranks:
        current, _ = value_step(current, rank.bit_length() - 1, n)
        trajectory.append(current)
    return Plan(
        value=value,
        n=n,
        subcase=subcase,
        ranks=ranks,
        trajectory=trajectory,
        final_value=current,
    )


# ── Breadth-first oracle ─────────────────────────────────────────────────────


@lru_cache(maxsize=None)
def _distance_table(n: int) -> tuple[int, ...]:
    """Fewest value_step moves from each state 0..2^n to a final value.

    Multi-source BFS over reversed moves: s is one move from s + 2^k. State 0
    never reaches a final, so it keeps UNREACHABLE.
    """
    size = 1 << n
    dist = [UNREACHABLE] * (size + 1)
    queue: deque[int] = deque()
    for value in _finals(n):
        if value <= size:
            dist[value] = 0
            queue.append(value)

    while queue:
        state = queue.popleft()
        for k in range(n + 1):
            prev = state + (1 << k)
            if prev > size:
                break
            if dist[prev] == UNREACHABLE:
                dist[prev] = dist[state] + 1
                queue.append(prev)
    return tuple(dist)


def bfs_min_ops(value: int, n: int) -> int:
    _check_value(value, n)
    if n > MAX_BFS_N:
        raise DomainError(f"BFS table holds 2^n + 1 states; n={n} exceeds {MAX_BFS_N}")
    return _distance_table(n)[value]


# ── Shannon function ─────────────────────────────────────────────────────────


def shannon_bound(n: int) -> tuple[int, int]:
    """floor(n - 2 sqrt(n) + 1) and floor(n - 2 sqrt(n) + 2), in exact integers."""
    if n < 1:
        raise DomainError(f"width must be at least 1, got n={n}")
    root = isqrt(4 * n)
    ceil_two_sqrt = root if root * root == 4 * n else root + 1
    bound_odd = n + 1 - ceil_two_sqrt
    return bound_odd, bound_odd + 1


def shannon_exhaustive(n: int) -> ShannonReport:
    """Maxima of the BFS counts over achievable A in (2^(n-1), 2^n]."""
    if not 1 <= n <= MAX_BFS_N:
        raise DomainError(f"width must be in 1..{MAX_BFS_N}, got n={n}")
    size = 1 << n
    table = _distance_table(n)

    max_odd = max_even = 0
    witness_odd = witness_even = None
    mismatches = []
    for value in range(size // 2 + 1, size + 1):
        count = table[value]
        if count != min_ops(value, n):
            mismatches.append(value)
        if value & 1:
            if witness_odd is None or count > max_odd:
                max_odd, witness_odd = count, value
        elif value < size:
            if witness_even is None or count > max_even:
                max_even, witness_even = count, value

    bound_odd, bound_even = shannon_bound(n)
    return ShannonReport(
        n=n,
        max_odd=max_odd,
        max_even=max_even,
        witness_odd=witness_odd,
        witness_even=witness_even,
        bound_odd=bound_odd,
        bound_even=bound_even,
        mismatches=mismatches,
    )
