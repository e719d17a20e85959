"""Derived sets of a distortion model, and distortion-set parsing."""

import logging
from collections.abc import Iterator
from dataclasses import dataclass
from pathlib import Path

from ..models.bitword import BitWord
from ..models.distortion import BurstVariant, DistortionKind, DistortionSet
from ..models.errors import DistortionSetError, WordLengthError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CorrectionStep:
    """Sets governing the choice of ``λ(e_i)`` in the correction constructor.

    Attributes:
        i: Position index, 1-based
        g: ``G_i``, prefixes ``d|_1^i`` of ``D ∪ {0}``
        h: ``H_i = G_i \\ G_{i-1}``
        f: ``F_i = {g ⊕ h ⊕ e_i : g ∈ G_{i-1}, h ∈ H_i}``
    """

    i: int
    g: frozenset[BitWord]
    h: frozenset[BitWord]
    f: frozenset[BitWord]


def last_one_position(length: int, value: int) -> int:
    """1-based position of the rightmost one of a nonzero carrier."""
    return length - ((value & -value).bit_length() - 1)


def _wrap(length: int, values: set[int]) -> frozenset[BitWord]:
    return frozenset(BitWord(length, v) for v in values)


def _correction_values(distortions: DistortionSet) -> Iterator[tuple[int, set[int], set[int], set[int]]]:
    L = distortions.L
    full = (1 << L) - 1
    plus = [0] + [w.value for w in distortions.as_tuple()]
    previous: set[int] = set()
    previous_for_f: set[int] = {0}
    for i in range(1, L + 1):
        g = {v & full & ~((1 << (L - i)) - 1) for v in plus}
        h = g - previous
        bit = 1 << (L - i)
        yield i, g, h, {a ^ b ^ bit for a in previous_for_f for b in h}
        previous = previous_for_f = g


class DistortionService:
    """Derived-set computations over a ``DistortionSet``."""

    @staticmethod
    def detection_sets(distortions: DistortionSet, i: int) -> tuple[frozenset[BitWord], frozenset[BitWord]]:
        """``D_i`` (members whose last one is at ``i``) and ``D'_i`` (the same with that one cleared)."""
        L = distortions.L
        if not 1 <= i <= L:
            raise WordLengthError(f"Position {i} out of range 1..{L}")
        bit = 1 << (L - i)
        d_i = {w.value for w in distortions.as_tuple() if last_one_position(L, w.value) == i}
        return _wrap(L, d_i), _wrap(L, {v ^ bit for v in d_i})

    @staticmethod
    def detection_partition(distortions: DistortionSet) -> list[set[int]]:
        """``D'_1 .. D'_L`` as integer carriers in one pass (index 0 is ``D'_1``)."""
        L = distortions.L
        cleared: list[set[int]] = [set() for _ in range(L)]
        for w in distortions.as_tuple():
            i = last_one_position(L, w.value)
            cleared[i - 1].add(w.value ^ (1 << (L - i)))
        return cleared

    @staticmethod
    def correction_sets(distortions: DistortionSet) -> list[CorrectionStep]:
        """``(G_i, H_i, F_i)`` for ``i = 1..L``.

        ``H_1 = G_1`` (increments against the empty set), while ``F_1`` is formed from the empty-prefix
        truncation ``{0}``.
        """
        L = distortions.L
        return [
            CorrectionStep(i, _wrap(L, g), _wrap(L, h), _wrap(L, f))
            for i, g, h, f in _correction_values(distortions)
        ]

    @staticmethod
    def correction_forbidden(distortions: DistortionSet) -> list[set[int]]:
        """``F_1 .. F_L`` as integer carriers, without building ``BitWord`` sets."""
        return [f for _, _, _, f in _correction_values(distortions)]

    @staticmethod
    def load_file(path: Path | str) -> DistortionSet:
        """Read a distortion-set file.

        The first line is ``L <n>``; every further non-blank line is one ``n``-digit word.

        Raises:
            DistortionSetError: On a bad header, a bad word, a zero word or a duplicate (with line number)
        """
        text = Path(path).read_text(encoding="utf-8")
        return DistortionService.parse_text(text)

    @staticmethod
    def parse_text(text: str) -> DistortionSet:
        lines = text.split("\n")
        header = lines[0].split() if lines else []
        if len(header) != 2 or header[0] != "L" or not header[1].isdigit() or int(header[1]) < 1:
            raise DistortionSetError("expected header 'L <positive integer>'", line=1)
        L = int(header[1])
        words: list[BitWord] = []
        seen: set[BitWord] = set()
        for number, raw in enumerate(lines[1:], start=2):
            line = raw.strip()
            if not line:
                continue
            try:
                word = BitWord.from_string(line)
            except WordLengthError as e:
                raise DistortionSetError(str(e), line=number) from e
            if word.length != L:
                raise DistortionSetError(f"word has {word.length} digits, expected {L}", line=number)
            if word.is_zero():
                raise DistortionSetError("the zero word is not a distortion", line=number)
            if word in seen:
                raise DistortionSetError(f"duplicate word {word}", line=number)
            seen.add(word)
            words.append(word)
        if not words:
            raise DistortionSetError("the file lists no distortions")
        logger.info(f"Loaded {len(words)} distortions of length {L}")
        return DistortionSet.explicit(words)

    @staticmethod
    def parse_burst(spec: str, L: int) -> DistortionSet:
        """Parse a ``b[:strict|general]`` flag value."""
        head, _, variant = spec.partition(":")
        if not head.isdigit():
            raise DistortionSetError(f"burst length must be a positive integer, got '{head}'")
        try:
            kind = BurstVariant(variant) if variant else BurstVariant.GENERAL
        except ValueError as e:
            raise DistortionSetError(f"unknown burst variant '{variant}' (use strict or general)") from e
        return DistortionSet.burst(L, int(head), kind)

    @staticmethod
    def from_descriptor(descriptor: str, L: int) -> DistortionSet:
        """Rebuild a distortion set from its compact text form (see ``DistortionSet.descriptor``)."""
        kind, _, rest = descriptor.partition(":")
        if kind == DistortionKind.WEIGHT_BALL.value and rest.isdigit():
            return DistortionSet.weight_ball(L, int(rest))
        if kind == DistortionKind.BURST.value:
            return DistortionService.parse_burst(rest, L)
        if kind == DistortionKind.EXPLICIT.value and rest:
            try:
                words = [BitWord.from_string(w) for w in rest.split(",")]
            except WordLengthError as e:
                raise DistortionSetError(f"bad explicit distortion list: {e}") from e
            result = DistortionSet.explicit(words)
            if result.L != L:
                raise DistortionSetError(f"distortions have length {result.L}, code has L={L}")
            return result
        raise DistortionSetError(f"unrecognized distortion descriptor '{descriptor}'")
