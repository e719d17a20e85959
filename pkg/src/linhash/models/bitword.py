"""Fixed-length binary words.

Position 1 is the leftmost digit. Internally a word of length ``n`` is an ``int`` whose most
significant of ``n`` bits holds position 1, so the textual form is just the zero-padded binary
representation of the value.
"""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from operator import xor as _int_xor
from typing import Any

from .errors import WordLengthError


@dataclass(frozen=True, order=False)
class BitWord:
    """A binary word of fixed length.

    Attributes:
        length: Number of bits (>= 1)
        value: Integer carrier; bit ``length - i`` of the integer is position ``i``
    """

    length: int
    value: int = 0

    def __post_init__(self) -> None:
        """Validate length and value range."""
        if self.length < 1:
            raise WordLengthError(f"Word length must be positive, got {self.length}")
        if self.value < 0 or self.value >> self.length:
            raise WordLengthError(f"Value {self.value} does not fit in {self.length} bits")

    @classmethod
    def from_string(cls, digits: str) -> "BitWord":
        """Parse a digit string such as ``"011000"`` (position 1 first)."""
        digits = digits.strip()
        if not digits or any(c not in "01" for c in digits):
            raise WordLengthError(f"Not a binary word: '{digits}'")
        return cls(len(digits), int(digits, 2))

    @classmethod
    def from_positions(cls, length: int, positions: Iterable[int]) -> "BitWord":
        """Build the word with ones exactly at the given 1-based positions."""
        value = 0
        for i in positions:
            if not 1 <= i <= length:
                raise WordLengthError(f"Position {i} out of range 1..{length}")
            value |= 1 << (length - i)
        return cls(length, value)

    @classmethod
    def zero(cls, length: int) -> "BitWord":
        return cls(length, 0)

    @property
    def weight(self) -> int:
        """Hamming weight (number of ones)."""
        return self.value.bit_count()

    @property
    def bits(self) -> tuple[int, ...]:
        """Digits as a tuple, position 1 first."""
        return tuple((self.value >> (self.length - i)) & 1 for i in range(1, self.length + 1))

    @property
    def support(self) -> tuple[int, ...]:
        """1-based positions holding a one, ascending."""
        return tuple(i for i in range(1, self.length + 1) if (self.value >> (self.length - i)) & 1)

    def bit(self, i: int) -> int:
        """Digit at 1-based position ``i``."""
        if not 1 <= i <= self.length:
            raise WordLengthError(f"Position {i} out of range 1..{self.length}")
        return (self.value >> (self.length - i)) & 1

    def is_zero(self) -> bool:
        return self.value == 0

    def truncate(self, i: int) -> "BitWord":
        """Keep positions 1..i and zero the rest (``x|_1^i``)."""
        if not 0 <= i <= self.length:
            raise WordLengthError(f"Prefix length {i} out of range 0..{self.length}")
        return BitWord(self.length, self.value & ~((1 << (self.length - i)) - 1))

    def __xor__(self, other: Any) -> "BitWord":
        if not isinstance(other, BitWord):
            return NotImplemented
        if other.length != self.length:
            raise WordLengthError(f"Cannot XOR words of lengths {self.length} and {other.length}")
        return BitWord(self.length, self.value ^ other.value)

    def __len__(self) -> int:
        return self.length

    def __str__(self) -> str:
        return format(self.value, f"0{self.length}b")

    def __repr__(self) -> str:
        return f"BitWord('{self}')"


def order_key(value: int) -> tuple[int, int]:
    """Sort key of the canonical word order: weight ascending, then lexicographic on the support.

    Within one weight, a support that starts further left sorts first, which for the integer
    carrier is descending value.
    """
    return (value.bit_count(), -value)


def unit(length: int, i: int) -> BitWord:
    """Return ``e^length_i``; ``i = 0`` gives the all-zero word."""
    if not 0 <= i <= length:
        raise WordLengthError(f"Unit index {i} out of range 0..{length}")
    if i == 0:
        return BitWord.zero(length)
    return BitWord(length, 1 << (length - i))


def xor(a: BitWord, b: BitWord) -> BitWord:
    return a ^ b


def weight(w: BitWord) -> int:
    return w.weight


def hamming_distance(a: BitWord, b: BitWord) -> int:
    return (a ^ b).weight


def iter_ball_values(length: int, max_weight: int, support_size: int | None = None) -> Iterator[int]:
    """Integer carriers of the ball, in canonical order.

    Args:
        length: Word length
        max_weight: Largest weight emitted
        support_size: Ones are confined to positions ``1..support_size`` (defaults to ``length``)
    """
    p = length if support_size is None else support_size
    for w in range(0, min(max_weight, p) + 1):
        for positions in combinations(range(1, p + 1), w):
            yield reduce(_int_xor, (1 << (length - i) for i in positions), 0)


def iter_words_in_order(length: int) -> Iterator[int]:
    """Every ``length``-bit carrier in canonical order (the "smallest word" order for choices)."""
    return iter_ball_values(length, length)


def ball(m: int, n: int, prefix_limit: int | None = None) -> Iterator[BitWord]:
    """Stream ``B^m_n``, optionally restricted to supports inside positions ``1..prefix_limit-1``.

    ``prefix_limit = m`` (the default) streams the whole ball. The stream is lazy and its order
    is stable: weight ascending, then lexicographic on the support.
    """
    if m < 1:
        raise WordLengthError(f"Ball word length must be positive, got {m}")
    if n < 0 or n > m:
        raise WordLengthError(f"Ball radius {n} out of range 0..{m}")
    limit = m if prefix_limit is None else prefix_limit
    if not 1 <= limit <= m:
        raise WordLengthError(f"Prefix limit {limit} out of range 1..{m}")
    support_size = m if limit == m else limit - 1
    for value in iter_ball_values(m, n, support_size):
        yield BitWord(m, value)


def random_value(rng: Any, bits: int) -> int:
    """Uniform ``bits``-bit integer from a numpy ``Generator``."""
    if bits <= 0:
        return 0
    raw = int.from_bytes(rng.bytes((bits + 7) // 8), "big")
    return raw >> ((8 - bits % 8) % 8)
