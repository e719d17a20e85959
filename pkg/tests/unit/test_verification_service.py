"""Unit tests for the verification oracles."""

from unittest.mock import patch

import pytest

from linhash.models import (
    CodeMode,
    CodeSpec,
    DistortionSet,
    InstanceTooLargeError,
    LinearHashFunction,
    OracleDisagreementError,
    SyndromeTable,
)
from linhash.services.verification_service import VerificationService, _pairwise_min_distance


@pytest.fixture
def hamming() -> CodeSpec:
    """The (7,3) Hamming code with checks at 5, 6, 7."""
    h = LinearHashFunction.from_strings(["110", "101", "011", "111", "100", "010", "001"])
    return CodeSpec.trailing_checks(h, CodeMode.DETECT, {"algorithm": "alg1", "d": "3"})


class TestBallNonzeroCheck:
    """Test the streamed ball oracle."""

    def test_hamming_passes_distance_three(self, hamming):
        """Test that no word of weight 1 or 2 hashes to zero."""
        assert VerificationService.ball_nonzero_check(hamming.hash, 3) is None

    def test_hamming_fails_distance_four(self, hamming):
        """Test that a weight-3 codeword is returned."""
        counterexample = VerificationService.ball_nonzero_check(hamming.hash, 4)

        assert counterexample is not None
        assert counterexample.weight == 3
        assert hamming.hash(counterexample).is_zero()

    def test_size_guard(self, hamming):
        """Test that a ball larger than the limit is refused."""
        with pytest.raises(InstanceTooLargeError):
            VerificationService.ball_nonzero_check(hamming.hash, 3, limit=5)

    def test_rejects_distance_below_two(self, hamming):
        """Test the d >= 2 precondition."""
        with pytest.raises(ValueError):
            VerificationService.ball_nonzero_check(hamming.hash, 1)


class TestMinDistance:
    """Test the distance oracles."""

    def test_hamming(self, hamming):
        """Test distance 3 and 16 codewords."""
        assert len(VerificationService.codewords(hamming)) == 16
        assert VerificationService.min_distance_bruteforce(hamming) == 3

    def test_detection_code_has_distance_one(self, detect_code):
        """Test that 010000 is a codeword of the alternating-table code."""
        assert VerificationService.min_distance_bruteforce(detect_code) == 1

    def test_enumeration_guard(self, hamming):
        """Test that L - l above the limit is refused."""
        with pytest.raises(InstanceTooLargeError):
            VerificationService.codewords(hamming, max_info_bits=3)

    def test_weight_oracle_alone(self, hamming):
        """Test that the pairwise oracle can be skipped."""
        assert VerificationService.min_distance_bruteforce(hamming, pairwise_limit=0) == 3

    def test_pairwise_distance_beyond_sixty_four_bits(self):
        """Test the plain-integer path on 100-bit carriers that differ only in high and middle bits."""
        a = (1 << 99) | (1 << 98) | (1 << 97)
        b = a | (1 << 66)

        assert _pairwise_min_distance([0, a, b], 100) == 1
        assert _pairwise_min_distance([0, a], 100) == 3

    def test_seventy_bit_code(self):
        """Test distance 17 through both oracles when every information bit drives a 16-bit block."""
        check_bits = 66
        block = (1 << 16) - 1
        rows = [block << (check_bits - 16 * j) for j in range(1, 5)]
        rows += [1 << (check_bits - i) for i in range(1, check_bits + 1)]
        h = LinearHashFunction.from_values(70, check_bits, rows)
        spec = CodeSpec.trailing_checks(h, CodeMode.DETECT, {})

        assert spec.info_bits == 4
        assert VerificationService.min_distance_bruteforce(spec, pairwise_limit=4) == 17

    def test_disagreement(self, hamming):
        """Test that differing oracles raise."""
        with patch("linhash.services.verification_service._pairwise_min_distance", return_value=2):
            with pytest.raises(OracleDisagreementError):
                VerificationService.min_distance_bruteforce(hamming)


class TestSyndromeCheck:
    """Test the injectivity oracle."""

    def test_passes(self, correct_code, burst_strict):
        """Test five distinct nonzero syndromes."""
        result = VerificationService.syndrome_check(correct_code, burst_strict)

        assert result.passed
        assert result.detail == "5 distinct syndromes"

    def test_collision(self, correct_code):
        """Test that 100000 and 000001 collide."""
        result = VerificationService.syndrome_check(correct_code, DistortionSet.weight_ball(6, 1))

        assert not result.passed
        assert len(result.counterexample) >= 1

    def test_stored_table_mismatch(self, correct_code, burst_strict, word):
        """Test that a stored table must equal the recomputed one."""
        stored = SyndromeTable({word("1111"): word("110000")})

        result = VerificationService.syndrome_check(correct_code, burst_strict, stored)

        assert not result.passed
        assert result.counterexample == ["1111"]

    def test_stored_table_missing_entries(self, correct_code, burst_strict, word):
        """Test that a stored table holding a correct subset reports the first syndrome it lacks."""
        stored = SyndromeTable({word("1100"): word("110000")})

        result = VerificationService.syndrome_check(correct_code, burst_strict, stored)

        assert not result.passed
        assert word("1100") in stored
        assert word("0110") not in stored
        assert result.counterexample == ["0110"]


class TestNonzeroCheck:
    """Test the detection oracle."""

    def test_passes(self, detect_code, burst_strict):
        """Test that every adjacent double flip is flagged."""
        assert VerificationService.nonzero_check(detect_code, burst_strict).passed

    def test_single_flip_escapes(self, detect_code):
        """Test that a flip on a zero-image position is reported."""
        result = VerificationService.nonzero_check(detect_code, DistortionSet.weight_ball(6, 1))

        assert not result.passed
        assert result.counterexample[0] in {"010000", "000100", "000001"}


class TestFuzzRoundtrip:
    """Test the encode/corrupt/decode oracle."""

    def test_exhaustive_when_space_is_small(self, detect_code, burst_strict):
        """Test 32 information words times 6 outcomes."""
        report = VerificationService.fuzz_roundtrip(detect_code, burst_strict, trials=1000, seed=0)

        assert report.passed
        assert report.exhaustive
        assert report.checks_run[0].detail == "192 frames (exhaustive)"

    def test_sampled(self, correct_code, burst_strict):
        """Test a seeded sample on the correction code."""
        report = VerificationService.fuzz_roundtrip(correct_code, burst_strict, trials=10, seed=7)

        assert report.passed
        assert not report.exhaustive
        assert "seed=7" in report.checks_run[0].detail

    def test_undetected_corruption(self, detect_code):
        """Test that the failing frame is reported."""
        report = VerificationService.fuzz_roundtrip(detect_code, DistortionSet.weight_ball(6, 1), 1000, 0)

        assert not report.passed
        assert report.checks_run[0].detail == "corruption not detected"


class TestVerifyCode:
    """Test the combined report."""

    def test_bounded_weight_code(self, hamming):
        """Test a passing d = 3 report."""
        report = VerificationService.verify_code(hamming, d=3)

        assert report.passed
        assert report.min_distance == 3
        assert report.ball_check_max_weight == 2
        assert [c.name for c in report.checks_run] == ["ball_nonzero", "min_distance", "ball_distance_agree"]

    def test_overclaimed_distance(self, hamming):
        """Test that d = 4 fails both oracles, which still agree."""
        report = VerificationService.verify_code(hamming, d=4)

        assert not report.passed
        checks = {c.name: c.passed for c in report.checks_run}
        assert checks == {"ball_nonzero": False, "min_distance": False, "ball_distance_agree": True}

    def test_general_correction_code(self, correct_code, burst_strict):
        """Test injectivity plus an exhaustive round trip."""
        report = VerificationService.verify_code(correct_code, distortions=burst_strict, exhaustive=True)

        assert report.passed
        assert report.exhaustive
        assert report.to_key_values().startswith("passed=true")

    def test_failed_syndrome_check_skips_round_trip(self, correct_code):
        """Test that the round trip does not run on a broken table."""
        report = VerificationService.verify_code(correct_code, distortions=DistortionSet.weight_ball(6, 1))

        assert not report.passed
        assert [c.name for c in report.checks_run] == ["syndrome_injective"]

    def test_distance_skipped_above_limit(self, monkeypatch, hamming):
        """Test the degraded path when L - l is too large to enumerate."""
        monkeypatch.setenv("LINHASH_MAX_INFO_BITS", "2")

        report = VerificationService.verify_code(hamming, d=3)

        assert report.passed
        assert report.min_distance is None
        assert any("min_distance skipped" in note for note in report.notes)

    def test_exhaustive_refuses_to_skip(self, monkeypatch, hamming):
        """Test that --exhaustive turns the skip into an error."""
        monkeypatch.setenv("LINHASH_MAX_INFO_BITS", "2")

        with pytest.raises(InstanceTooLargeError):
            VerificationService.verify_code(hamming, d=3, exhaustive=True)
