"""Thinned-out words, unions, the parity tree and final-word detection."""

import pytest
from hypothesis import given, settings

from src.core.engines import complexity_naive, synthesize_word
from src.core.errors import DomainError
from src.core.planner import is_final
from src.core.thinning import detect_final, parity_tree, thin, union_thinned
from src.core.words import parity, parse_word
from src.models.enums import Parity
from tests.strategies import words


class TestThin:
    def test_even_and_odd_positions(self):
        w = parse_word("0b10110100")
        assert thin(w, 1, 0) == parse_word("0b1100")
        assert thin(w, 1, 1) == parse_word("0b0110")

    def test_level_zero_is_the_word(self):
        w = parse_word("0b0110")
        assert thin(w, 0, 0) == w

    def test_top_level_is_single_bits(self):
        w = parse_word("0b0110")
        assert [thin(w, 2, i).value for i in range(4)] == [0, 1, 1, 0]

    @pytest.mark.parametrize("m, i", [(3, 0), (-1, 0), (1, 2), (1, -1)])
    def test_out_of_range(self, m, i):
        with pytest.raises(DomainError):
            thin(parse_word("0b0110"), m, i)


class TestUnion:
    @given(words(max_n=6))
    @settings(max_examples=100, deadline=None)
    def test_rebuilds_the_word(self, w):
        for m in range(w.n + 1):
            parts = [(i, thin(w, m, i)) for i in range(1 << m)]
            assert union_thinned(parts, m) == w

    def test_parts_in_any_order(self):
        w = parse_word("0b10110100")
        parts = [(i, thin(w, 2, i)) for i in reversed(range(4))]
        assert union_thinned(parts, 2) == w

    def test_missing_offset(self):
        w = parse_word("0b0110")
        with pytest.raises(DomainError, match="offsets"):
            union_thinned([(0, thin(w, 1, 0))], 1)

    def test_duplicate_offset(self):
        w = parse_word("0b0110")
        with pytest.raises(DomainError, match="duplicate"):
            union_thinned([(0, thin(w, 1, 0)), (0, thin(w, 1, 0))], 1)

    def test_inconsistent_lengths(self):
        with pytest.raises(DomainError, match="inconsistent"):
            union_thinned([(0, parse_word("0b01")), (1, parse_word("0b0110"))], 1)


class TestParityTree:
    def test_levels_of_worked_word(self):
        tree = parity_tree(parse_word("0b10110100"))
        assert tree.level(3) == (1, 0, 1, 1, 0, 1, 0, 0)
        assert tree.level(2) == (1, 1, 1, 1)
        assert tree.level(1) == (0, 0)
        assert tree.level(0) == (0,)
        assert tree.odd_levels() == [2]

    def test_render_lines(self):
        assert parity_tree(parse_word("0b10")).render_lines() == ["0: 1", "1: 1 0"]

    def test_xor_budget(self, all_words):
        for w in all_words:
            assert parity_tree(w, reference=True).xor_count == w.length - 1
            assert parity_tree(w).xor_count == w.length - 1

    @given(words(max_n=8))
    @settings(max_examples=100, deadline=None)
    def test_packed_matches_reference(self, w):
        assert parity_tree(w).levels == parity_tree(w, reference=True).levels

    @given(words(max_n=6))
    @settings(max_examples=100, deadline=None)
    def test_entries_are_thinned_word_parities(self, w):
        tree = parity_tree(w)
        for m in range(w.n + 1):
            for i in range(1 << m):
                assert tree.level(m)[i] == (parity(thin(w, m, i)) == Parity.ODD)

    @given(words(max_n=8))
    @settings(max_examples=100, deadline=None)
    def test_at_most_one_all_odd_level(self, w):
        assert len(parity_tree(w).odd_levels()) <= 1


class TestDetectFinal:
    def test_worked_word(self):
        d = detect_final(parse_word("0b10110100"))
        assert (d.level, d.complexity, d.period_n) == (2, 5, 3)

    def test_odd_word_has_full_complexity(self):
        d = detect_final(parse_word("0b1000"))
        assert (d.level, d.complexity) == (0, 4)

    def test_all_ones_is_complexity_one(self):
        d = detect_final(parse_word("0b1111"))
        assert (d.complexity, d.period_n) == (1, 0)

    def test_zero_word_is_not_final(self):
        assert detect_final(parse_word("0b0000")) is None

    def test_agrees_with_oracle_exhaustively(self, all_words):
        for w in all_words:
            a, _ = complexity_naive(w)
            d = detect_final(w)
            if a and is_final(a, w.n):
                assert d is not None and d.complexity == a, str(w)
            else:
                assert d is None, str(w)

    @pytest.mark.parametrize("n", [4, 6, 8])
    def test_synthesized_finals_detect_at_their_level(self, n):
        size = 1 << n
        for m in range(n):
            for seed in range(5):
                d = detect_final(synthesize_word(n, size - (1 << m) + 1, seed))
                assert d is not None
                assert (d.level, d.period_n) == (m, n)
