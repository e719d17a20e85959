"""Tests for fixed-length binary words."""

from math import comb

import numpy as np
import pytest

from linhash.models import BitWord, WordLengthError, ball, hamming_distance, iter_words_in_order, order_key
from linhash.models import unit, weight, xor
from linhash.models.bitword import iter_ball_values, random_value


class TestBitWord:
    """Test BitWord construction and accessors."""

    def test_from_string_keeps_position_one_first(self):
        """Test that the textual form is the digit string, position 1 first."""
        w = BitWord.from_string("011000")

        assert w.length == 6
        assert w.value == 0b011000
        assert str(w) == "011000"
        assert w.bits == (0, 1, 1, 0, 0, 0)
        assert w.support == (2, 3)
        assert w.bit(2) == 1
        assert w.bit(1) == 0

    def test_leading_zeros_are_kept(self):
        """Test that leading zeros survive the textual round trip."""
        assert str(BitWord.from_string("000011")) == "000011"
        assert str(BitWord.zero(4)) == "0000"

    def test_from_positions(self):
        """Test building a word from its support."""
        assert str(BitWord.from_positions(6, [1, 6])) == "100001"

    def test_from_positions_rejects_out_of_range(self):
        """Test that positions outside 1..L are rejected."""
        with pytest.raises(WordLengthError):
            BitWord.from_positions(4, [5])

    def test_rejects_non_binary_digits(self):
        """Test that only 0 and 1 are accepted."""
        with pytest.raises(WordLengthError):
            BitWord.from_string("0120")
        with pytest.raises(WordLengthError):
            BitWord.from_string("")

    def test_rejects_value_out_of_range(self):
        """Test that the carrier must fit the length."""
        with pytest.raises(WordLengthError):
            BitWord(3, 8)
        with pytest.raises(WordLengthError):
            BitWord(0, 0)

    def test_truncate_keeps_prefix(self):
        """Test that truncate zeroes every position after i."""
        w = BitWord.from_string("011011")

        assert str(w.truncate(3)) == "011000"
        assert str(w.truncate(0)) == "000000"
        assert w.truncate(6) == w

    def test_words_are_hashable_and_comparable(self):
        """Test value semantics."""
        assert BitWord.from_string("0101") == BitWord(4, 5)
        assert len({BitWord(4, 5), BitWord.from_string("0101")}) == 1
        assert BitWord(4, 5) != BitWord(5, 5)


class TestWordOperations:
    """Test unit, xor, weight and distance."""

    def test_unit_word(self):
        """Test e^6_2 = 010000 and e^6_0 is the zero word."""
        assert str(unit(6, 2)) == "010000"
        assert unit(6, 0).is_zero()

    def test_unit_rejects_bad_index(self):
        """Test that indices beyond the length are rejected."""
        with pytest.raises(WordLengthError):
            unit(6, 7)

    def test_xor(self):
        """Test that XOR recovers the transmitted word from a corrupted one."""
        assert str(xor(BitWord.from_string("111110"), BitWord.from_string("011000"))) == "100110"

    def test_xor_rejects_length_mismatch(self):
        """Test that words of different lengths cannot be combined."""
        with pytest.raises(WordLengthError):
            BitWord.from_string("01") ^ BitWord.from_string("011")

    def test_weight_and_distance(self):
        """Test Hamming weight and distance."""
        assert weight(BitWord.from_string("011000")) == 2
        assert hamming_distance(BitWord.from_string("111110"), BitWord.from_string("100110")) == 2


class TestCanonicalOrder:
    """Test the weight-then-lexicographic order used for every choice."""

    def test_words_in_order(self):
        """Test the order of all 3-bit words."""
        words = [format(v, "03b") for v in iter_words_in_order(3)]

        assert words == ["000", "100", "010", "001", "110", "101", "011", "111"]

    def test_order_key_agrees_with_enumeration(self):
        """Test that sorting by order_key reproduces the enumeration order."""
        values = list(iter_words_in_order(5))

        assert sorted(values, key=order_key) == values
        assert len(set(values)) == 32


class TestBall:
    """Test Hamming ball streaming."""

    def test_ball_size(self):
        """Test |B^5_2| = 1 + 5 + 10."""
        assert len(list(ball(5, 2))) == 16

    def test_ball_members_have_bounded_weight(self):
        """Test that every streamed word has weight <= n."""
        assert all(w.weight <= 2 for w in ball(6, 2))

    def test_ball_with_prefix_limit(self):
        """Test that a prefix limit confines supports to positions before it."""
        words = [str(w) for w in ball(6, 2, prefix_limit=3)]

        assert words == ["000000", "100000", "010000", "110000"]

    def test_small_examples(self):
        """Test |B^6_2| = 22 and the two prefix-limited listings."""
        assert len(list(ball(6, 2))) == 22
        assert [str(w) for w in ball(6, 1, 3)] == ["000000", "100000", "010000"]
        assert [str(w) for w in ball(4, 1, 4)] == ["0000", "1000", "0100", "0010", "0001"]

    @pytest.mark.parametrize("m", range(1, 15))
    def test_every_radius_up_to_fourteen_bits(self, m):
        """Test size, distinctness and weight bound for every radius 0..m."""
        for n in range(m + 1):
            words = list(ball(m, n))

            assert len(words) == sum(comb(m, i) for i in range(n + 1))
            assert len(set(words)) == len(words)
            assert all(w.length == m and w.weight <= n for w in words)

    @pytest.mark.parametrize("m", range(15, 21))
    def test_long_words(self, m):
        """Test small radii and the full ball for 15..20 bits."""
        for n in (0, 1, 2, 3):
            words = list(ball(m, n))

            assert len(words) == sum(comb(m, i) for i in range(n + 1))
            assert len(set(words)) == len(words)
            assert all(w.weight <= n for w in words)

        values = list(iter_ball_values(m, m))
        assert len(values) == 2**m
        assert set(values) == set(range(2**m))

    def test_ball_rejects_bad_radius(self):
        """Test that radius and limits are checked."""
        with pytest.raises(WordLengthError):
            list(ball(4, 5))
        with pytest.raises(WordLengthError):
            list(ball(4, 1, prefix_limit=0))


class TestRandomValue:
    """Test uniform draws from a numpy generator."""

    def test_draws_fit_the_width(self):
        """Test that draws never exceed the requested width."""
        rng = np.random.default_rng(7)

        assert all(0 <= random_value(rng, 5) < 32 for _ in range(200))

    def test_draws_are_reproducible(self):
        """Test that equal seeds give equal draws."""
        rng_a, rng_b = np.random.default_rng(3), np.random.default_rng(3)
        first = [random_value(rng_a, 12) for _ in range(20)]
        second = [random_value(rng_b, 12) for _ in range(20)]

        assert first == second

    def test_zero_width(self):
        """Test that a zero-width draw is zero."""
        assert random_value(np.random.default_rng(0), 0) == 0
