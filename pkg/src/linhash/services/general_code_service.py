"""Detection and correction hash functions for an arbitrary distortion set."""

import logging
from collections.abc import Mapping
from typing import Optional

import numpy as np

from ..config import get_settings
from ..models.bitword import BitWord, iter_words_in_order
from ..models.code_spec import Algorithm, CodeMode, GeneralCodeResult
from ..models.distortion import DistortionSet
from ..models.errors import InternalExhaustionError, InvariantViolationError, NoSolutionError
from ..models.hash_function import LinearHashFunction, xor_images
from .distortion_service import DistortionService

logger = logging.getLogger(__name__)


def smallest_check_bits(max_size: int) -> int:
    """Smallest ``l >= 1`` with ``2^l - 1 >= max_size``."""
    return max(1, max_size.bit_length())


class GeneralCodeService:
    """Constructors that take the distortion set itself as input.

    Check symbols sit at positions ``1..l``; each later position takes the smallest word that
    avoids the images of its forbidden set.
    """

    @staticmethod
    def construct_detector(
        distortions: DistortionSet, preferred: Optional[Mapping[int, BitWord]] = None
    ) -> GeneralCodeResult:
        """Build ``λ`` with ``λ(d) != 0`` for every ``d`` in ``D``.

        Args:
            distortions: The distortion set D
            preferred: Optional values to use at given positions ``i > l`` when admissible

        Returns:
            GeneralCodeResult in detection mode

        Raises:
            NoSolutionError: If ``2^l - 1 >= max_i |D'_i|`` needs ``l >= L``
            ValueError: If a preferred value is not admissible
        """
        forbidden_sets = DistortionService.detection_partition(distortions)
        return GeneralCodeService._construct(distortions, forbidden_sets, CodeMode.DETECT, preferred)

    @staticmethod
    def construct_corrector(
        distortions: DistortionSet, preferred: Optional[Mapping[int, BitWord]] = None
    ) -> GeneralCodeResult:
        """Build ``λ`` that is injective on ``D ∪ {0}``.

        Args:
            distortions: The distortion set D
            preferred: Optional values to use at given positions ``i > l`` when admissible

        Returns:
            GeneralCodeResult in correction mode

        Raises:
            NoSolutionError: If ``2^l - 1 >= max_i |F_i|`` needs ``l >= L``
            ValueError: If a preferred value is not admissible
        """
        forbidden_sets = DistortionService.correction_forbidden(distortions)
        return GeneralCodeService._construct(distortions, forbidden_sets, CodeMode.CORRECT, preferred)

    @staticmethod
    def construct(distortions: DistortionSet, mode: CodeMode) -> GeneralCodeResult:
        if mode is CodeMode.DETECT:
            return GeneralCodeService.construct_detector(distortions)
        return GeneralCodeService.construct_corrector(distortions)

    @staticmethod
    def _construct(
        distortions: DistortionSet,
        forbidden_sets: list[set[int]],
        mode: CodeMode,
        preferred: Optional[Mapping[int, BitWord]],
    ) -> GeneralCodeResult:
        L = distortions.L
        derived_max = max(len(s) for s in forbidden_sets)
        check_bits = smallest_check_bits(derived_max)
        if check_bits >= L:
            raise NoSolutionError(L, check_bits, f"max forbidden-set size {derived_max}")
        algorithm = Algorithm.DETECTOR if mode is CodeMode.DETECT else Algorithm.CORRECTOR
        logger.info(f"{algorithm.display_name}: L={L}, |D|={len(distortions)}, max={derived_max}")
        logger.info(f"Chosen l={check_bits}")

        wishes = dict(preferred or {})
        for i in wishes:
            if not check_bits < i <= L:
                raise ValueError(f"Preferred value at position {i}: only positions {check_bits + 1}..{L} are free")

        values = [0] * L
        for i in range(1, check_bits + 1):
            values[i - 1] = 1 << (check_bits - i)
        for i in range(check_bits + 1, L + 1):
            images = {xor_images(values, L, w) for w in forbidden_sets[i - 1]}
            if i in wishes:
                wish = wishes[i]
                if wish.length != check_bits or wish.value in images:
                    raise ValueError(f"Preferred value {wish} is not admissible at position {i}")
                values[i - 1] = wish.value
            else:
                choice = next((v for v in iter_words_in_order(check_bits) if v not in images), None)
                if choice is None:
                    raise InternalExhaustionError(i, f"Every {check_bits}-bit word is forbidden at position {i}")
                values[i - 1] = choice
            logger.debug(f"step {i}: λ(e_{i}) = {values[i - 1]:0{check_bits}b} ({len(images)} forbidden)")

        h = LinearHashFunction.from_values(L, check_bits, values)
        return GeneralCodeResult(
            hash=h,
            mode=mode,
            derived_max=derived_max,
            distortions_descriptor=distortions.descriptor,
            verified_exhaustively=GeneralCodeService.verify_construction(h, distortions, mode),
        )

    @staticmethod
    def verify_construction(h: LinearHashFunction, distortions: DistortionSet, mode: CodeMode) -> bool:
        """Check ``λ(d) != 0`` on D, plus injectivity on ``D ∪ {0}`` when correcting.

        Returns:
            True when every member was checked, False when a seeded sample was

        Raises:
            InvariantViolationError: On a zero syndrome or a shared syndrome
        """
        settings = get_settings()
        members = distortions.as_tuple()
        exhaustive = len(members) <= settings.exhaustive_verify_limit
        if not exhaustive:
            rng = np.random.default_rng(0)
            size = min(settings.verification_samples, len(members))
            picks = rng.choice(len(members), size=size, replace=False)
            members = tuple(members[int(k)] for k in picks)
            logger.warning(f"|D|={len(distortions)} exceeds the exhaustive limit; verified {len(members)} samples")
        seen: dict[int, BitWord] = {}
        for d in members:
            s = h.evaluate_value(d.value)
            if s == 0:
                raise InvariantViolationError("nonzero-on-D", f"{d} hashes to zero")
            if mode is CodeMode.CORRECT:
                if s in seen:
                    raise InvariantViolationError("injective-on-D", f"{seen[s]} and {d} share a syndrome")
                seen[s] = d
        return exhaustive
