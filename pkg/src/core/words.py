"""Word-core: parsing, rendering and the rank-2^k XOR-shift operator."""

from __future__ import annotations

from pathlib import Path

from src.core.errors import DomainError, WordParseError
from src.models.enums import Parity
from src.models.word import OperatorRank, PeriodicWord

HEX_DIGITS = frozenset("0123456789abcdef")


# ── Text formats ─────────────────────────────────────────────────────────────


def parse_word(text: str) -> PeriodicWord:
    """Parse `0b...` (one bit per digit) or `0x...` (four bits per digit), MSB first."""
    token = text.strip()
    prefix, digits = token[:2].lower(), token[2:].lower()

    if prefix == "0b":
        if not digits or set(digits) - {"0", "1"}:
            raise WordParseError(f"illegal binary word: {token!r}")
        binary = digits
    elif prefix == "0x":
        if not digits or set(digits) - HEX_DIGITS:
            raise WordParseError(f"illegal hex word: {token!r}")
        binary = "".join(f"{int(d, 16):04b}" for d in digits)
    else:
        raise WordParseError(f"word must start with 0b or 0x: {token!r}")

    size = len(binary)
    if size & (size - 1):
        raise WordParseError(f"word length {size} is not a power of two: {token!r}")
    return PeriodicWord(int(binary, 2), size.bit_length() - 1)


def render_word(word: PeriodicWord, fmt: str = "bin") -> str:
    if fmt == "bin":
        return str(word)
    if fmt == "hex":
        if word.length < 4:
            raise DomainError(f"hex needs at least 4 bits, word has {word.length}")
        return f"0x{word.value:0{word.length // 4}x}"
    raise DomainError(f"unknown word format: {fmt!r}")


def parse_words_file(path: Path) -> list[PeriodicWord]:
    """One word per line; `#` starts a comment, blank lines are skipped."""
    try:
        text = path.read_text()
    except OSError as e:
        raise WordParseError(f"cannot read words file {path}: {e}") from e

    words = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        token = line.split("#", 1)[0].strip()
        if not token:
            continue
        try:
            words.append(parse_word(token))
        except WordParseError as e:
            raise WordParseError(f"{path}:{lineno}: {e}") from e
    return words


# ── Operators ────────────────────────────────────────────────────────────────


def as_rank(rank: OperatorRank | int) -> OperatorRank:
    return rank if isinstance(rank, OperatorRank) else OperatorRank(rank)


def _checked_rank(word: PeriodicWord, rank: OperatorRank | int) -> int:
    h = as_rank(rank).rank
    if h > word.length:
        raise DomainError(f"rank {h} exceeds word length {word.length}")
    return h


def rotate_left(value: int, h: int, size: int) -> int:
    """Cyclic left rotation: position j of the result holds position j + h."""
    return ((value << h) | (value >> (size - h))) & ((1 << size) - 1)


def apply_operator(word: PeriodicWord, rank: OperatorRank | int) -> PeriodicWord:
    """F(w, h): z_j = w_j XOR w_{(j + h) mod 2^n}."""
    h = _checked_rank(word, rank)
    return PeriodicWord(word.value ^ rotate_left(word.value, h, word.length), word.n)


def apply_operator_reference(word: PeriodicWord, rank: OperatorRank | int) -> PeriodicWord:
    """Unpacked, position-by-position evaluation of F(w, h)."""
    h = _checked_rank(word, rank)
    bits = word.bits
    size = len(bits)
    return PeriodicWord.from_bits(bits[j] ^ bits[(j + h) % size] for j in range(size))


def iterate_rank1(word: PeriodicWord, t: int) -> PeriodicWord:
    if t < 0:
        raise DomainError(f"iteration count must be non-negative, got {t}")
    size = word.length
    value = word.value
    for _ in range(t):
        if not value:
            break
        value ^= rotate_left(value, 1, size)
    return PeriodicWord(value, word.n)


# ── Queries ──────────────────────────────────────────────────────────────────


def parity(word: PeriodicWord) -> Parity:
    return Parity.ODD if word.value.bit_count() & 1 else Parity.EVEN


def reduce_to_minimal_period(word: PeriodicWord) -> tuple[PeriodicWord, int]:
    """Halve while both halves agree. Returns the minimal period and 2^n / |period|."""
    value, n = word.value, word.n
    while n > 0:
        half = 1 << (n - 1)
        low = value & ((1 << half) - 1)
        if value >> half != low:
            break
        value, n = low, n - 1
    return PeriodicWord(value, n), 1 << (word.n - n)
