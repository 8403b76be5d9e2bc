"""Hypothesis strategies for words and complexities."""

from hypothesis import strategies as st

from src.models.word import PeriodicWord


@st.composite
def words(draw, min_n: int = 0, max_n: int = 7):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    value = draw(st.integers(min_value=0, max_value=(1 << (1 << n)) - 1))
    return PeriodicWord(value, n)


@st.composite
def achievable(draw, min_n: int = 1, max_n: int = 12):
    """(A, n) with 1 <= A <= 2^n."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    value = draw(st.integers(min_value=1, max_value=1 << n))
    return value, n
