"""Constructors for codes of minimum distance ``d``: VG-matching, improved and randomized."""

import logging
from itertools import combinations
from typing import Optional

import numpy as np

from ..models.bitword import BitWord, iter_words_in_order, order_key, random_value
from ..models.code_spec import (
    RNG_ALGORITHM,
    Algorithm,
    BoundedWeightParams,
    CodeMode,
    CodeSpec,
    ConstructionTrace,
)
from ..models.errors import (
    ChoiceSetEmptyError,
    ConstructionFailedError,
    InternalExhaustionError,
    InvariantViolationError,
    NoSolutionError,
)
from ..models.hash_function import LinearHashFunction
from .bounds import check_bits_improved, check_bits_vg, improvement_applies
from .verification_service import VerificationService

logger = logging.getLogger(__name__)


class PrefixImages:
    """Images ``λ̂(B^{i}_k)`` for ``k = 0..max_weight``, grown one position at a time.

    ``B^i_k`` only gains ``e_i ⊕ B^{i-1}_{k-1}`` when position ``i`` is assigned, so each level is
    updated from the previous level's old contents (levels are walked top-down).
    """

    def __init__(self, max_weight: int) -> None:
        self.levels: list[set[int]] = [{0} for _ in range(max_weight + 1)]

    def extend(self, value: int) -> None:
        for k in range(len(self.levels) - 1, 0, -1):
            below = self.levels[k - 1]
            self.levels[k].update(value ^ t for t in below)

    def level(self, k: int) -> set[int]:
        return self.levels[k]


def _smallest_outside(width: int, forbidden: set[int]) -> Optional[int]:
    for value in iter_words_in_order(width):
        if value not in forbidden:
            return value
    return None


def _final_permutation(pre: list[int], check_bits: int) -> list[int]:
    # λ(e_i) = λ̂(e_{i+l}) for i <= L-l, then the unit images move to the end
    return pre[check_bits:] + pre[:check_bits]


def _unit_prefix(check_bits: int) -> list[int]:
    return [1 << (check_bits - i) for i in range(1, check_bits + 1)]


class BoundedWeightService:
    """Deterministic and randomized constructions for the weight ball ``B^L_{d-1}``.

    Every result keeps its check symbols at positions ``L-l+1..L``.
    """

    @staticmethod
    def construct_alg1(params: BoundedWeightParams) -> tuple[LinearHashFunction, ConstructionTrace]:
        """VG-matching construction.

        Each new position takes the smallest word outside ``λ̂(B^{i-1}_{d-2})``.

        Raises:
            NoSolutionError: If the check-bit formula gives ``l >= L``
            InternalExhaustionError: If a choice set is unexpectedly empty
        """
        L, d = params.L, params.d
        check_bits = check_bits_vg(L, d)
        logger.info(f"{Algorithm.ALG1.display_name}: L={L}, d={d}, l={check_bits}")
        pre = BoundedWeightService._greedy(L, d, check_bits, improved=False)
        return BoundedWeightService._finish(L, check_bits, pre, Algorithm.ALG1)

    @staticmethod
    def construct_alg2(params: BoundedWeightParams) -> tuple[LinearHashFunction, ConstructionTrace]:
        """Improved construction.

        Each new position takes the smallest word in ``λ̂(B^{i-1}_{d-1}) \\ λ̂(B^{i-1}_{d-2})``. Below
        ``d = 5`` (or for ``L <= d + 1``) the improvement is vacuous and the VG-matching rule is used.
        The output is checked against the ball before it is returned.

        Raises:
            NoSolutionError: If the check-bit formula gives ``l >= L``
            ChoiceSetEmptyError: If the choice set is empty at some step
        """
        L, d = params.L, params.d
        check_bits = check_bits_improved(L, d)
        improved = improvement_applies(L, d)
        logger.info(f"{Algorithm.ALG2.display_name}: L={L}, d={d}, l={check_bits}, improved={improved}")
        pre = BoundedWeightService._greedy(L, d, check_bits, improved=improved)
        h, trace = BoundedWeightService._finish(L, check_bits, pre, Algorithm.ALG2)
        counterexample = VerificationService.ball_nonzero_check(h, d)
        if counterexample is not None:
            raise InvariantViolationError("ball-nonzero", f"Algorithm 2 output hashes {counterexample} to zero")
        return h, trace

    @staticmethod
    def construct_alg3(params: BoundedWeightParams) -> tuple[LinearHashFunction, ConstructionTrace]:
        """Randomized construction with ``l + delta`` check bits.

        Positions ``1..l+delta`` take unit words; the rest are drawn uniformly from a numpy PCG64
        generator seeded with ``params.seed``. The drawn table must pass the ball check.

        Raises:
            NoSolutionError: If ``l + delta >= L``
            ConstructionFailedError: If the drawn table fails the ball check
        """
        L, d = params.L, params.d
        extended = check_bits_vg(L, d) + params.delta
        if extended >= L:
            raise NoSolutionError(L, extended, f"l + delta leaves no information symbols (delta={params.delta})")
        rng = np.random.default_rng(params.seed)
        images = PrefixImages(d - 2)
        pre = _unit_prefix(extended)
        for value in pre:
            images.extend(value)
        pi_event = True
        for _ in range(extended + 1, L + 1):
            value = random_value(rng, extended)
            if value in images.level(d - 2):
                pi_event = False
            pre.append(value)
            images.extend(value)
        h, base = BoundedWeightService._finish(L, extended, pre, Algorithm.ALG3)
        trace = ConstructionTrace(
            algorithm=Algorithm.ALG3,
            check_bits=extended,
            pre_permutation_table=base.pre_permutation_table,
            seed=params.seed,
            delta=params.delta,
            rng=RNG_ALGORITHM,
            pi_event=pi_event,
        )
        counterexample = VerificationService.ball_nonzero_check(h, d)
        if counterexample is not None:
            logger.warning(f"{Algorithm.ALG3.display_name}: seed={params.seed} failed the ball check at {counterexample}")
            raise ConstructionFailedError(params.seed, h.table, counterexample)
        logger.info(f"{Algorithm.ALG3.display_name}: seed={params.seed}, l={extended}, pi_event={pi_event}")
        return h, trace

    @staticmethod
    def construct(
        algorithm: Algorithm, params: BoundedWeightParams
    ) -> tuple[LinearHashFunction, ConstructionTrace]:
        constructors = {
            Algorithm.ALG1: BoundedWeightService.construct_alg1,
            Algorithm.ALG2: BoundedWeightService.construct_alg2,
            Algorithm.ALG3: BoundedWeightService.construct_alg3,
        }
        if algorithm not in constructors:
            raise ValueError(f"{algorithm.value} is not a bounded-weight algorithm")
        return constructors[algorithm](params)

    @staticmethod
    def to_code_spec(h: LinearHashFunction, trace: ConstructionTrace, d: int, mode: CodeMode) -> CodeSpec:
        return CodeSpec.trailing_checks(h, mode, trace.as_provenance(d))

    @staticmethod
    def _greedy(L: int, d: int, check_bits: int, improved: bool) -> list[int]:
        images = PrefixImages(d - 1 if improved else d - 2)
        pre = _unit_prefix(check_bits)
        for value in pre:
            images.extend(value)
        for i in range(check_bits + 1, L + 1):
            forbidden = images.level(d - 2)
            if improved:
                candidates = images.level(d - 1) - forbidden
                if not candidates:
                    raise ChoiceSetEmptyError(i)
                value = min(candidates, key=order_key)
            else:
                found = _smallest_outside(check_bits, forbidden)
                if found is None:
                    raise InternalExhaustionError(i, f"No admissible value at step i={i} (|image|={len(forbidden)})")
                value = found
            logger.debug(f"step {i}: λ̂(e_{i}) = {value:0{check_bits}b}")
            pre.append(value)
            images.extend(value)
        return pre

    @staticmethod
    def _finish(
        L: int, check_bits: int, pre: list[int], algorithm: Algorithm
    ) -> tuple[LinearHashFunction, ConstructionTrace]:
        table = _final_permutation(pre, check_bits)
        h = LinearHashFunction.from_values(L, check_bits, table)
        trace = ConstructionTrace(
            algorithm=algorithm,
            check_bits=check_bits,
            pre_permutation_table=tuple(BitWord(check_bits, v) for v in pre),
        )
        return h, trace

    @staticmethod
    def enumerate_z(L: int, d: int) -> list[BitWord]:
        """Every ``z = x y 00`` with ``|x| = d-1``, ``|y| = L-d-1``, ``||x||+||y|| <= d-3``, ``||y|| <= ||x||-1``.

        No guard on ``d``; needs ``L >= d + 1`` so the three blocks fit.
        """
        if L < d + 1 or d < 3:
            raise ValueError(f"enumerate_z needs d >= 3 and L >= d + 1, got L={L}, d={d}")
        head = list(range(1, d))
        tail = list(range(d, L - 1))
        words: list[int] = []
        for s in range(1, d - 2):
            for j in range(0, min(s - 1, d - 3 - s, len(tail)) + 1):
                for xs in combinations(head, s):
                    for ys in combinations(tail, j):
                        words.append(sum(1 << (L - p) for p in xs + ys))
        words.sort(key=order_key)
        return [BitWord(L, v) for v in words]

    @staticmethod
    def uvz_sets(L: int, d: int) -> tuple[list[BitWord], list[BitWord], list[BitWord]]:
        """``(Z, U, V)`` for the improvement, with the pairing properties checked.

        ``U = 00..010 ⊕ Z`` and ``V = 1^{d-1}0..0 ⊕ Z``. Empty unless ``d >= 5`` and ``L > d + 1``.

        Raises:
            InvariantViolationError: If U and V intersect or leave ``B^{L-1}_{d-2}``
        """
        if not improvement_applies(L, d):
            return [], [], []
        z = BoundedWeightService.enumerate_z(L, d)
        marker = BitWord(L, 0b10)
        ones = BitWord(L, ((1 << (d - 1)) - 1) << (L - d + 1))
        u = [marker ^ w for w in z]
        v = [ones ^ w for w in z]
        if set(u) & set(v):
            raise InvariantViolationError("uv-disjoint", f"U and V intersect for L={L}, d={d}")
        for w in u + v:
            if w.weight > d - 2 or w.bit(L):
                raise InvariantViolationError("uv-in-ball", f"{w} is not in B^(L-1)_(d-2)")
        if not len(u) == len(v) == len(z) == len(set(u)) == len(set(v)):
            raise InvariantViolationError("uv-size", f"|U|, |V| and |Z| differ for L={L}, d={d}")
        return z, u, v
