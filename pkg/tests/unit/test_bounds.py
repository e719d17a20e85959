"""Unit tests for check-bit counts and probability bounds."""

from fractions import Fraction
from math import comb

import pytest

from linhash.services.bounds import (
    ZSizeVariant,
    ball_size,
    ceil_log2,
    check_bits_improved,
    check_bits_vg,
    improvement_applies,
    success_bound,
    success_bound_product,
    vg_bound,
    vg_sum,
    z_size,
)


def _reference_ceil_log2(n: int) -> int:
    k = 0
    while 2**k < n:
        k += 1
    return k


def _reference_l(L: int, d: int) -> int:
    return _reference_ceil_log2(sum(comb(L - 1, i) for i in range(d - 1)) + 1)


class TestCeilLog2:
    """Test the exact integer logarithm."""

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 8, 9, 131, 2**40, 2**40 + 1])
    def test_matches_reference(self, n):
        """Test against a loop-based reference."""
        assert ceil_log2(n) == _reference_ceil_log2(n)

    def test_rejects_zero(self):
        """Test that the argument must be positive."""
        with pytest.raises(ValueError):
            ceil_log2(0)


class TestCheckBitsVg:
    """Test the VG-matching check-bit count."""

    @pytest.mark.parametrize("L", range(3, 21))
    def test_distance_two_needs_one_bit(self, L):
        """Test that d = 2 is a single parity bit."""
        assert check_bits_vg(L, 2) == 1

    def test_hamming_length(self):
        """Test l = 3 for L = 7, d = 3."""
        assert check_bits_vg(7, 3) == 3

    def test_distance_four_on_six_bits(self):
        """Test l = ⌈log2(1+5+10+1)⌉ = 5."""
        assert check_bits_vg(6, 4) == 5

    def test_never_reaches_message_length(self):
        """Test that every valid (L, d) with L <= 10 leaves an information symbol."""
        for L in range(3, 11):
            for d in range(2, L):
                assert check_bits_vg(L, d) < L

    def test_matches_reference(self):
        """Test against an independent big-integer evaluation."""
        for L in range(3, 65):
            for d in range(2, min(L, 11)):
                assert check_bits_vg(L, d) == _reference_l(L, d)

    def test_rejects_invalid_distance(self):
        """Test the 2 <= d < L precondition."""
        with pytest.raises(ValueError):
            check_bits_vg(5, 5)
        with pytest.raises(ValueError):
            check_bits_vg(5, 1)


class TestCheckBitsImproved:
    """Test the improved check-bit count."""

    def test_never_above_vg(self):
        """Test l_improved <= l_vg for L <= 64, d <= 10."""
        for L in range(3, 65):
            for d in range(2, min(L, 11)):
                assert check_bits_improved(L, d) <= check_bits_vg(L, d)

    def test_strict_improvement_instance(self):
        """Test that L = 10, d = 5 saves one check bit."""
        assert check_bits_vg(10, 5) == 8
        assert check_bits_improved(10, 5) == 7

    @pytest.mark.parametrize("d", [3, 4])
    def test_small_distances_unchanged(self, d):
        """Test that the correction term is empty below d = 5."""
        for L in range(d + 1, 30):
            assert check_bits_improved(L, d) == check_bits_vg(L, d)

    def test_improvement_range(self):
        """Test when the |Z| correction applies."""
        assert improvement_applies(10, 5)
        assert not improvement_applies(6, 5)
        assert not improvement_applies(20, 4)

    @pytest.mark.parametrize(
        "L,d,ball_sum,z,l_vg,l_improved",
        [
            (10, 5, 130, 10, 8, 7),
            (12, 6, 562, 75, 10, 9),
            (16, 7, 4944, 336, 13, 13),
            (20, 6, 5036, 155, 13, 13),
        ],
    )
    def test_reference_values(self, L, d, ball_sum, z, l_vg, l_improved):
        """Test ball sums, |Z| and both check-bit counts worked out by hand."""
        assert vg_sum(L, d) == ball_sum
        assert z_size(L, d) == z
        assert check_bits_vg(L, d) == l_vg
        assert check_bits_improved(L, d) == l_improved
        assert _reference_ceil_log2(ball_sum - z + 1) == l_improved


class TestZSize:
    """Test the |Z| formula variants."""

    def test_variants_at_twelve_bits_distance_six(self):
        """Test the three index ranges at L = 12, d = 6."""
        assert z_size(12, 6, ZSizeVariant.PRINTED) == 200
        assert z_size(12, 6, ZSizeVariant.PROOF) == 225
        assert z_size(12, 6, ZSizeVariant.PINNED) == 75

    def test_default_is_pinned(self):
        """Test that the pinned range is the default."""
        assert z_size(10, 5) == z_size(10, 5, ZSizeVariant.PINNED) == 10

    def test_empty_below_distance_four(self):
        """Test that there is no s for d = 3."""
        assert z_size(10, 3) == 0


class TestSuccessBound:
    """Test the randomized construction's success bounds."""

    def test_exact_value(self):
        """Test 1 - 2080/2^15 at L = 64, d = 3, delta = 8."""
        assert success_bound(64, 3, 8) == Fraction(959, 1024)

    def test_clamped_at_zero(self):
        """Test that a negative bound is reported as zero."""
        assert success_bound(64, 3, 3) == 0

    def test_monotone_in_delta(self):
        """Test that more check bits never lower the bound."""
        values = [success_bound(32, 3, delta) for delta in range(12)]

        assert values == sorted(values)

    def test_each_extra_bit_halves_the_gap(self):
        """Test 1 - bound halves exactly per extra bit once the bound is positive."""
        for delta in range(8, 14):
            assert 1 - success_bound(64, 3, delta + 1) == (1 - success_bound(64, 3, delta)) / 2

    def test_approaches_one(self):
        """Test that the bound tends to 1 as delta grows."""
        assert success_bound(20, 4, 60) > Fraction(1) - Fraction(1, 2**40)

    def test_product_form_dominates(self):
        """Test that the product bound is never below the union bound."""
        for L, d in [(10, 2), (16, 3), (20, 4), (32, 3)]:
            for delta in range(0, 8):
                assert success_bound_product(L, d, delta) >= success_bound(L, d, delta)

    def test_product_form_for_parity(self):
        """Test (1/2)^9 for L = 10, d = 2, delta = 0."""
        assert success_bound_product(10, 2, 0) == Fraction(1, 512)
        assert success_bound(10, 2, 0) == 0

    def test_rejects_negative_delta(self):
        """Test the delta precondition."""
        with pytest.raises(ValueError):
            success_bound(10, 3, -1)
        with pytest.raises(ValueError):
            success_bound_product(10, 3, -1)

    def test_matches_reference(self):
        """Test against an independent rational evaluation."""
        for L, d, delta in [(32, 3, 2), (32, 3, 4), (32, 3, 6), (40, 5, 10)]:
            l_delta = _reference_l(L, d) + delta
            union = sum(comb(L, j + 1) for j in range(d - 1))
            expected = max(Fraction(0), 1 - Fraction(union, 2**l_delta))
            assert success_bound(L, d, delta) == expected


class TestVgBound:
    """Test the Varshamov-Gilbert reference calculator."""

    def test_hamming_size(self):
        """Test 2^(7-3) = 16."""
        assert vg_bound(7, 3) == 16

    @pytest.mark.parametrize("L", range(2, 16))
    def test_parity_size(self, L):
        """Test 2^(L-1) for d = 2."""
        assert vg_bound(L, 2) == 2 ** (L - 1)

    def test_ceiling_sanity(self):
        """Test vg_bound · (1 + Σ C(L-1, i)) >= 2^(L-1)."""
        for L in range(2, 30):
            for d in range(2, L + 1):
                assert vg_bound(L, d) * (1 + ball_size(L - 1, d - 2)) >= 2 ** (L - 1)

    def test_accepts_distance_equal_to_length(self):
        """Test d = L."""
        assert vg_bound(5, 5) == 2

    def test_rejects_out_of_range(self):
        """Test the L >= 2, 2 <= d <= L precondition."""
        with pytest.raises(ValueError):
            vg_bound(1, 2)
        with pytest.raises(ValueError):
            vg_bound(5, 6)
