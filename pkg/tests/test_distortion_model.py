"""Tests for the DistortionSet model."""

import pytest

from linhash.models import BitWord, BurstVariant, DistortionKind, DistortionSet, DistortionSetError


def _strs(distortions: DistortionSet) -> list[str]:
    return [str(w) for w in distortions.members()]


class TestExplicitSet:
    """Test explicitly listed distortion sets."""

    def test_members_keep_listed_order(self):
        """Test that members stream in the order given."""
        d = DistortionSet.explicit([BitWord.from_string("0110"), BitWord.from_string("1000")])

        assert d.kind is DistortionKind.EXPLICIT
        assert d.L == 4
        assert _strs(d) == ["0110", "1000"]
        assert len(d) == 2
        assert d.descriptor == "explicit:0110,1000"

    def test_rejects_zero_word(self):
        """Test that the zero word is not a distortion."""
        with pytest.raises(DistortionSetError):
            DistortionSet.explicit([BitWord.from_string("0000")])

    def test_rejects_duplicates(self):
        """Test that a word may appear once."""
        w = BitWord.from_string("0100")
        with pytest.raises(DistortionSetError):
            DistortionSet.explicit([w, w])

    def test_rejects_mixed_lengths(self):
        """Test that all words share the set's length."""
        with pytest.raises(DistortionSetError):
            DistortionSet.explicit([BitWord.from_string("0100"), BitWord.from_string("01")])

    def test_rejects_empty(self):
        """Test that an explicit set needs members."""
        with pytest.raises(DistortionSetError):
            DistortionSet.explicit([])


class TestWeightBall:
    """Test weight-ball distortion sets."""

    def test_single_errors(self):
        """Test weight 1 gives the unit words in canonical order."""
        assert _strs(DistortionSet.weight_ball(4, 1)) == ["1000", "0100", "0010", "0001"]

    def test_size(self):
        """Test |B^5_2| - 1 nonzero members."""
        d = DistortionSet.weight_ball(5, 2)

        assert len(d) == 15
        assert d.descriptor == "weight:2"

    def test_rejects_bad_weight(self):
        """Test the weight bound range."""
        with pytest.raises(DistortionSetError):
            DistortionSet.weight_ball(4, 0)
        with pytest.raises(DistortionSetError):
            DistortionSet.weight_ball(4, 5)


class TestBurst:
    """Test burst distortion sets."""

    def test_strict_burst_fills_window(self):
        """Test the five adjacent double flips on 6 bits."""
        d = DistortionSet.burst(6, 2, BurstVariant.STRICT)

        assert _strs(d) == ["110000", "011000", "001100", "000110", "000011"]
        assert d.descriptor == "burst:2:strict"

    def test_general_burst_is_any_pattern_in_window(self):
        """Test that general bursts are keyed by their first one without repeats."""
        d = DistortionSet.burst(4, 2)

        assert _strs(d) == ["1000", "1100", "0100", "0110", "0010", "0011", "0001"]
        assert d.variant is BurstVariant.GENERAL
        assert d.descriptor == "burst:2:general"

    def test_general_burst_has_no_duplicates(self):
        """Test member uniqueness for a longer window."""
        members = DistortionSet.burst(8, 3).as_tuple()

        assert len(members) == len(set(members))
        assert all(not w.is_zero() for w in members)

    def test_rejects_bad_length(self):
        """Test the burst length range."""
        with pytest.raises(DistortionSetError):
            DistortionSet.burst(4, 5)
        with pytest.raises(DistortionSetError):
            DistortionSet.burst(4, 0)

    def test_as_tuple_is_cached(self):
        """Test that materialized members are reused."""
        d = DistortionSet.burst(6, 2)

        assert d.as_tuple() is d.as_tuple()
