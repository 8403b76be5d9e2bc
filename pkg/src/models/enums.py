from enum import StrEnum


class Parity(StrEnum):
    EVEN = "even"
    ODD = "odd"


class StepCase(StrEnum):
    CLEAR_BIT = "clear-bit"
    BORROW = "borrow"


class Subcase(StrEnum):
    ALREADY_FINAL = "already-final"
    ODD = "odd"
    EVEN_CLEAR = "even-2.1"
    EVEN_SHIFT = "even-2.2"


class Terminal(StrEnum):
    ZERO = "zero-word"
    FINAL = "final-word"
    OPEN = "open"


class Engine(StrEnum):
    FAST = "fast"
    NAIVE = "naive"


class VerifyLevel(StrEnum):
    QUICK = "quick"
    FULL = "full"


class CheckStatus(StrEnum):
    OK = "ok"
    WARN = "warn"
    FAIL = "fail"
