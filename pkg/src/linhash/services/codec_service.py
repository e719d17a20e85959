"""Encoding, detection and syndrome-table correction for a ``CodeSpec``."""

import logging

from ..models.bitword import BitWord
from ..models.code_spec import CodeMode, CodeSpec, DecodeOutcome, DecodeStatus, SyndromeTable
from ..models.distortion import DistortionSet
from ..models.errors import SyndromeCollisionError, WordLengthError

logger = logging.getLogger(__name__)


def _require_length(word: BitWord, expected: int, what: str) -> None:
    if word.length != expected:
        raise WordLengthError(f"{what} must have {expected} bits, got {word.length}")


class CodecService:
    """Stateless coding operations.

    Check symbols are filled with one hash evaluation: the j-th check position hashes to the
    j-th unit word, so writing ``λ(x*)`` into the check positions cancels the hash.
    """

    @staticmethod
    def scatter_info(spec: CodeSpec, info: BitWord) -> int:
        """Carrier of the word with ``info`` at the information positions and zeros elsewhere."""
        _require_length(info, spec.info_bits, "Information word")
        L = spec.L
        value = 0
        for k, p in enumerate(spec.info_positions, start=1):
            if (info.value >> (info.length - k)) & 1:
                value |= 1 << (L - p)
        return value

    @staticmethod
    def encode(spec: CodeSpec, info: BitWord) -> BitWord:
        """Codeword of ``A_0`` carrying ``info`` at the information positions.

        Raises:
            WordLengthError: If ``info`` is not ``L - l`` bits long
        """
        L, check_bits = spec.L, spec.check_bits
        value = CodecService.scatter_info(spec, info)
        w = spec.hash.evaluate_value(value)
        for j, p in enumerate(spec.check_positions, start=1):
            if (w >> (check_bits - j)) & 1:
                value |= 1 << (L - p)
        return BitWord(L, value)

    @staticmethod
    def extract_info(spec: CodeSpec, x: BitWord) -> BitWord:
        """Read the information positions in ascending order."""
        _require_length(x, spec.L, "Codeword")
        value = 0
        for p in spec.info_positions:
            value = (value << 1) | x.bit(p)
        return BitWord(spec.info_bits, value)

    @staticmethod
    def detect(spec: CodeSpec, y: BitWord) -> DecodeOutcome:
        """Clean iff ``λ(y) = 0``; otherwise ErrorDetected carrying the syndrome."""
        syndrome = spec.hash.evaluate(y)
        if syndrome.is_zero():
            return DecodeOutcome(DecodeStatus.CLEAN, codeword=y)
        return DecodeOutcome(DecodeStatus.ERROR_DETECTED, syndrome=syndrome)

    @staticmethod
    def build_syndrome_table(spec: CodeSpec, distortions: DistortionSet) -> SyndromeTable:
        """Map ``λ(d) -> d`` over ``D``, in member order.

        Raises:
            ValueError: If the code is not a correction code or lengths disagree
            SyndromeCollisionError: On a zero syndrome or two distortions sharing one
        """
        if spec.mode is not CodeMode.CORRECT:
            raise ValueError("Syndrome tables are only built for correction codes")
        if distortions.L != spec.L:
            raise WordLengthError(f"Distortions have length {distortions.L}, code has L={spec.L}")
        entries: dict[BitWord, BitWord] = {}
        for d in distortions.members():
            s = spec.hash.evaluate(d)
            if s.is_zero():
                raise SyndromeCollisionError(d, None)
            if s in entries:
                raise SyndromeCollisionError(entries[s], d)
            entries[s] = d
        logger.info(f"Syndrome table built with {len(entries)} entries")
        return SyndromeTable(entries)

    @staticmethod
    def correct(spec: CodeSpec, table: SyndromeTable, y: BitWord) -> DecodeOutcome:
        """Exact syndrome lookup; an unknown nonzero syndrome is Uncorrectable."""
        syndrome = spec.hash.evaluate(y)
        if syndrome.is_zero():
            return DecodeOutcome(DecodeStatus.CLEAN, codeword=y)
        distortion = table.lookup(syndrome)
        if distortion is None:
            return DecodeOutcome(DecodeStatus.UNCORRECTABLE, syndrome=syndrome)
        return DecodeOutcome(DecodeStatus.CORRECTED, syndrome=syndrome, codeword=y ^ distortion, distortion=distortion)
