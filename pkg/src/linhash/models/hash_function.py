"""Linear hash functions stored as the table of unit-word images."""

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

import numpy as np

from .bitword import BitWord, random_value
from .errors import WordLengthError

logger = logging.getLogger(__name__)


def xor_images(values: Sequence[int], length: int, x: int) -> int:
    """XOR of ``values[i-1]`` over the positions ``i`` where the ``length``-bit carrier ``x`` has a one.

    Walks the set bits only, so runs of zero digits cost nothing. Constructors use it on partially
    filled tables, touching only positions already assigned.
    """
    result = 0
    while x:
        low = x & -x
        result ^= values[length - low.bit_length()]
        x ^= low
    return result


@dataclass(frozen=True)
class LinearHashFunction:
    """A linear map from ``length``-bit words to ``hash_length``-bit words.

    Stored extensionally as ``table = (v_1, ..., v_L)`` with ``v_i`` the image of the i-th unit
    word; every linear map has this form, and the table is enough to evaluate, compare and
    serialize it.

    Attributes:
        length: Message length L
        hash_length: Hash length l, ``1 <= l < L``
        table: Images of the unit words, ``length`` entries of ``hash_length`` bits
    """

    length: int
    hash_length: int
    table: tuple[BitWord, ...]
    _values: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        """Validate table shape and cache the integer carriers."""
        if not 1 <= self.hash_length < self.length:
            raise WordLengthError(f"Hash length must satisfy 1 <= l < L, got l={self.hash_length}, L={self.length}")
        if len(self.table) != self.length:
            raise WordLengthError(f"Table must have {self.length} entries, got {len(self.table)}")
        for i, v in enumerate(self.table, start=1):
            if v.length != self.hash_length:
                raise WordLengthError(f"Table entry v_{i} has length {v.length}, expected {self.hash_length}")
        object.__setattr__(self, "table", tuple(self.table))
        object.__setattr__(self, "_values", tuple(v.value for v in self.table))

    @classmethod
    def from_values(cls, length: int, hash_length: int, values: Sequence[int]) -> "LinearHashFunction":
        return cls(length, hash_length, tuple(BitWord(hash_length, v) for v in values))

    @classmethod
    def from_strings(cls, rows: Sequence[str]) -> "LinearHashFunction":
        """Build from digit strings, e.g. ``["1000", "0100", ...]``."""
        table = tuple(BitWord.from_string(r) for r in rows)
        if not table:
            raise WordLengthError("Table must not be empty")
        return cls(len(table), table[0].length, table)

    @property
    def values(self) -> tuple[int, ...]:
        """Integer carriers of the table entries."""
        return self._values

    def evaluate_value(self, x: int) -> int:
        """Evaluate on an integer carrier: XOR of ``v_i`` over the ones of ``x``."""
        return xor_images(self._values, self.length, x)

    def evaluate(self, x: BitWord) -> BitWord:
        if x.length != self.length:
            raise WordLengthError(f"Expected a {self.length}-bit word, got {x.length} bits")
        return BitWord(self.hash_length, self.evaluate_value(x.value))

    def __call__(self, x: BitWord) -> BitWord:
        return self.evaluate(x)

    def rows(self) -> list[str]:
        return [str(v) for v in self.table]


def evaluate(h: LinearHashFunction, x: BitWord) -> BitWord:
    """λ(x) = x_1·v_1 ⊕ ... ⊕ x_L·v_L."""
    return h.evaluate(x)


def image(h: LinearHashFunction, words: Iterable[BitWord]) -> set[BitWord]:
    """Distinct hash values over a stream of words."""
    values = {h.evaluate(w).value for w in words}
    return {BitWord(h.hash_length, v) for v in values}


def linearity_check(h: LinearHashFunction, trials: int, seed: int) -> bool:
    """Sample pairs and confirm ``λ(x ⊕ y) = λ(x) ⊕ λ(y)``.

    Always true for a table-backed map; kept as a test utility.
    """
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        x = random_value(rng, h.length)
        y = random_value(rng, h.length)
        if h.evaluate_value(x ^ y) != h.evaluate_value(x) ^ h.evaluate_value(y):
            logger.error(f"Linearity violated for x={x:0{h.length}b}, y={y:0{h.length}b}")
            return False
    return True
