"""Distortion sets: the error patterns a channel may XOR onto a codeword."""

from collections.abc import Iterator
from dataclasses import dataclass, field
from enum import Enum
from itertools import product

from .bitword import BitWord, iter_ball_values
from .errors import DistortionSetError


class DistortionKind(str, Enum):
    """How the members of a distortion set are described.

    Values:
        EXPLICIT: A listed set of words
        WEIGHT_BALL: Every nonzero word of weight <= t
        BURST: Every nonzero word confined to a window of b consecutive positions
    """

    EXPLICIT = "explicit"
    WEIGHT_BALL = "weight"
    BURST = "burst"


class BurstVariant(str, Enum):
    """Burst models.

    Values:
        STRICT: The ones fill the window exactly (the two-adjacent-flips patterns)
        GENERAL: Any nonzero pattern inside the window
    """

    STRICT = "strict"
    GENERAL = "general"


@dataclass(frozen=True)
class DistortionSet:
    """An explicit or implicit set ``D`` of nonzero ``L``-bit error patterns.

    Use the ``explicit``, ``weight_ball`` and ``burst`` constructors; members are streamed in a
    deterministic order by ``members()``.
    """

    L: int
    kind: DistortionKind
    words: tuple[BitWord, ...] = ()
    max_weight: int = 0
    burst_length: int = 0
    variant: BurstVariant = BurstVariant.GENERAL
    _cache: dict[str, tuple[BitWord, ...]] = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        """Validate according to kind."""
        if self.L < 1:
            raise DistortionSetError(f"Word length must be positive, got {self.L}")
        if self.kind is DistortionKind.EXPLICIT:
            if not self.words:
                raise DistortionSetError("An explicit distortion set must not be empty")
            seen: set[BitWord] = set()
            for w in self.words:
                if w.length != self.L:
                    raise DistortionSetError(f"Distortion {w} has length {w.length}, expected {self.L}")
                if w.is_zero():
                    raise DistortionSetError("The zero word is not a distortion")
                if w in seen:
                    raise DistortionSetError(f"Duplicate distortion {w}")
                seen.add(w)
        elif self.kind is DistortionKind.WEIGHT_BALL:
            if not 1 <= self.max_weight <= self.L:
                raise DistortionSetError(f"Weight bound must be in 1..{self.L}, got {self.max_weight}")
        elif self.kind is DistortionKind.BURST:
            if not 1 <= self.burst_length <= self.L:
                raise DistortionSetError(f"Burst length must be in 1..{self.L}, got {self.burst_length}")

    @classmethod
    def explicit(cls, words: list[BitWord] | tuple[BitWord, ...]) -> "DistortionSet":
        if not words:
            raise DistortionSetError("An explicit distortion set must not be empty")
        return cls(L=words[0].length, kind=DistortionKind.EXPLICIT, words=tuple(words))

    @classmethod
    def weight_ball(cls, L: int, t: int) -> "DistortionSet":
        return cls(L=L, kind=DistortionKind.WEIGHT_BALL, max_weight=t)

    @classmethod
    def burst(cls, L: int, b: int, variant: BurstVariant = BurstVariant.GENERAL) -> "DistortionSet":
        return cls(L=L, kind=DistortionKind.BURST, burst_length=b, variant=variant)

    def members(self) -> Iterator[BitWord]:
        """Stream ``D`` in its deterministic order."""
        if self.kind is DistortionKind.EXPLICIT:
            yield from self.words
        elif self.kind is DistortionKind.WEIGHT_BALL:
            for value in iter_ball_values(self.L, self.max_weight):
                if value:
                    yield BitWord(self.L, value)
        else:
            yield from self._burst_members()

    def _burst_members(self) -> Iterator[BitWord]:
        # Windows left to right; a general burst is keyed by its first one so nothing repeats.
        b = self.burst_length
        if self.variant is BurstVariant.STRICT:
            window = (1 << b) - 1
            for start in range(1, self.L - b + 2):
                yield BitWord(self.L, window << (self.L - start - b + 1))
            return
        for start in range(1, self.L + 1):
            tail = list(range(start + 1, min(start + b - 1, self.L) + 1))
            for pattern in product((0, 1), repeat=len(tail)):
                value = 1 << (self.L - start)
                for pos, bit in zip(tail, pattern):
                    if bit:
                        value |= 1 << (self.L - pos)
                yield BitWord(self.L, value)

    def as_tuple(self) -> tuple[BitWord, ...]:
        """Materialized members (cached)."""
        if "members" not in self._cache:
            self._cache["members"] = tuple(self.members())
        return self._cache["members"]

    def __len__(self) -> int:
        return len(self.as_tuple())

    @property
    def descriptor(self) -> str:
        """Compact text form, e.g. ``weight:1``, ``burst:2:strict`` or ``explicit:011,110``."""
        if self.kind is DistortionKind.WEIGHT_BALL:
            return f"weight:{self.max_weight}"
        if self.kind is DistortionKind.BURST:
            return f"burst:{self.burst_length}:{self.variant.value}"
        return "explicit:" + ",".join(str(w) for w in self.words)
