"""Brute-force oracles that certify constructed codes."""

import logging
from typing import Optional

import numpy as np

from ..config import get_settings
from ..models.bitword import BitWord, iter_ball_values, random_value
from ..models.code_spec import CodeMode, CodeSpec, DecodeStatus, SyndromeTable
from ..models.distortion import DistortionSet
from ..models.errors import InstanceTooLargeError, OracleDisagreementError, SyndromeCollisionError
from ..models.hash_function import LinearHashFunction
from ..models.report import CheckResult, VerificationReport
from .bounds import ball_size, vg_bound
from .codec_service import CodecService

logger = logging.getLogger(__name__)

__all__ = ["VerificationService", "vg_bound"]


def _pairwise_min_distance(codewords: list[int], length: int) -> int:
    best = length + 1
    if length <= 64:
        arr = np.array(codewords, dtype=np.uint64)
        for i in range(len(arr) - 1):
            best = min(best, int(np.bitwise_count(arr[i] ^ arr[i + 1 :]).min()))
        return best
    for i, a in enumerate(codewords):
        for b in codewords[i + 1 :]:
            best = min(best, (a ^ b).bit_count())
    return best


class VerificationService:
    """Oracles over immutable codes; none of them trusts the constructors."""

    @staticmethod
    def ball_nonzero_check(h: LinearHashFunction, d: int, limit: Optional[int] = None) -> Optional[BitWord]:
        """Stream ``B^L_{d-1} \\ {0}`` and return the first word hashing to zero.

        Returns:
            None when every word has a nonzero hash (equivalently the encoding set has distance >= d),
            otherwise the counterexample

        Raises:
            InstanceTooLargeError: If the ball is larger than ``limit``
        """
        if d < 2:
            raise ValueError(f"Ball check needs d >= 2, got {d}")
        L = h.length
        limit = get_settings().ball_stream_limit if limit is None else limit
        size = ball_size(L, d - 1)
        if size > limit:
            raise InstanceTooLargeError(f"|B^{L}_{d - 1}| = {size} exceeds the ball stream limit {limit}")
        for value in iter_ball_values(L, d - 1):
            if value and h.evaluate_value(value) == 0:
                counterexample = BitWord(L, value)
                logger.info(f"Ball check failed at {counterexample}")
                return counterexample
        return None

    @staticmethod
    def codewords(spec: CodeSpec, max_info_bits: Optional[int] = None) -> list[int]:
        """Every codeword carrier, in information-word order."""
        limit = get_settings().max_info_bits if max_info_bits is None else max_info_bits
        if spec.info_bits > limit:
            raise InstanceTooLargeError(f"L - l = {spec.info_bits} exceeds the enumeration limit {limit}")
        k = spec.info_bits
        return [CodecService.encode(spec, BitWord(k, m)).value for m in range(1 << k)]

    @staticmethod
    def min_distance_bruteforce(
        spec: CodeSpec, max_info_bits: Optional[int] = None, pairwise_limit: Optional[int] = None
    ) -> int:
        """Minimum Hamming distance of the encoding set.

        The minimum nonzero codeword weight is always computed; the all-pairs minimum is computed
        too while ``L - l <= pairwise_limit`` and the two must agree.

        Raises:
            InstanceTooLargeError: If ``L - l`` exceeds ``max_info_bits``
            OracleDisagreementError: If the two oracles differ
        """
        words = VerificationService.codewords(spec, max_info_bits)
        by_weight = min(w.bit_count() for w in words if w)
        limit = get_settings().pairwise_info_limit if pairwise_limit is None else pairwise_limit
        if spec.info_bits <= limit:
            pairwise = _pairwise_min_distance(words, spec.L)
            if pairwise != by_weight:
                raise OracleDisagreementError(f"pairwise distance {pairwise} != minimum weight {by_weight}")
        else:
            logger.warning(f"Pairwise oracle skipped: L - l = {spec.info_bits} > {limit}")
        return by_weight

    @staticmethod
    def syndrome_check(
        spec: CodeSpec, distortions: DistortionSet, stored: Optional[SyndromeTable] = None
    ) -> CheckResult:
        """Injectivity of ``λ`` on ``D ∪ {0}``, and agreement with a stored table when given."""
        try:
            table = CodecService.build_syndrome_table(spec, distortions)
        except SyndromeCollisionError as e:
            bad = [str(e.first)] + ([str(e.second)] if e.second is not None else [])
            return CheckResult(name="syndrome_injective", passed=False, detail=str(e), counterexample=bad)
        if stored is not None and dict(stored.entries) != dict(table.entries):
            mismatched = [str(s) for s in stored.entries if table.lookup(s) != stored.lookup(s)]
            return CheckResult(
                name="syndrome_injective",
                passed=False,
                detail="stored syndrome table does not match the code",
                counterexample=mismatched or [str(s) for s in table.entries if s not in stored][:1],
            )
        return CheckResult(name="syndrome_injective", passed=True, detail=f"{len(table)} distinct syndromes")

    @staticmethod
    def nonzero_check(spec: CodeSpec, distortions: DistortionSet) -> CheckResult:
        """Every distortion has a nonzero syndrome."""
        for d in distortions.members():
            if spec.hash.evaluate_value(d.value) == 0:
                return CheckResult(
                    name="nonzero_on_D", passed=False, detail="undetectable distortion", counterexample=[str(d)]
                )
        return CheckResult(name="nonzero_on_D", passed=True, detail=f"{len(distortions)} distortions flagged")

    @staticmethod
    def fuzz_roundtrip(
        spec: CodeSpec,
        distortions: DistortionSet,
        trials: int,
        seed: int,
        table: Optional[SyndromeTable] = None,
    ) -> VerificationReport:
        """Corrupt codewords with members of ``D`` (or leave them clean) and decode them.

        Covers every ``(info, distortion-or-clean)`` pair when there are at most ``trials`` of them,
        otherwise draws ``trials`` pairs from a seeded generator.
        """
        k = spec.info_bits
        members = distortions.as_tuple()
        if spec.mode is CodeMode.CORRECT and table is None:
            table = CodecService.build_syndrome_table(spec, distortions)
        space = (1 << k) * (len(members) + 1)
        exhaustive = space <= trials
        if exhaustive:
            pairs = ((m, j) for m in range(1 << k) for j in range(len(members) + 1))
        else:
            rng = np.random.default_rng(seed)
            pairs = ((random_value(rng, k), int(rng.integers(0, len(members) + 1))) for _ in range(trials))

        count = 0
        for m, j in pairs:
            count += 1
            info = BitWord(k, m)
            x = CodecService.encode(spec, info)
            d = members[j] if j < len(members) else None
            y = x ^ d if d is not None else x
            failure = VerificationService._judge(spec, table, info, x, y, d)
            if failure:
                report = VerificationReport()
                witness = [str(info)] + ([str(d)] if d is not None else [])
                report.add(
                    CheckResult(name="fuzz_roundtrip", passed=False, detail=failure, counterexample=witness),
                    exhaustive=exhaustive,
                )
                return report
        report = VerificationReport()
        detail = f"{count} frames {'(exhaustive)' if exhaustive else f'(sampled, seed={seed})'}"
        report.add(CheckResult(name="fuzz_roundtrip", passed=True, detail=detail), exhaustive=exhaustive)
        return report

    @staticmethod
    def _judge(
        spec: CodeSpec,
        table: Optional[SyndromeTable],
        info: BitWord,
        x: BitWord,
        y: BitWord,
        d: Optional[BitWord],
    ) -> str:
        if spec.mode is CodeMode.DETECT:
            outcome = CodecService.detect(spec, y)
            if d is None and not outcome.is_clean:
                return "false alarm on a clean frame"
            if d is not None and outcome.status is not DecodeStatus.ERROR_DETECTED:
                return "corruption not detected"
            return ""
        assert table is not None
        outcome = CodecService.correct(spec, table, y)
        if d is None:
            return "" if outcome.is_clean else "clean frame not reported clean"
        if outcome.status is not DecodeStatus.CORRECTED or outcome.codeword != x:
            return f"corruption decoded as {outcome.status.value}"
        if CodecService.extract_info(spec, outcome.codeword) != info:
            return "recovered information differs"
        return ""

    @staticmethod
    def verify_code(
        spec: CodeSpec,
        d: Optional[int] = None,
        distortions: Optional[DistortionSet] = None,
        table: Optional[SyndromeTable] = None,
        exhaustive: bool = False,
        trials: Optional[int] = None,
        seed: int = 0,
    ) -> VerificationReport:
        """Run every oracle that applies to the code and collect the results.

        Args:
            spec: Code under test
            d: Claimed minimum distance (bounded-weight codes)
            distortions: Distortion model (general codes, or the correction ball of a bounded-weight code)
            table: Stored syndrome table to compare against
            exhaustive: Refuse to sample; fail with InstanceTooLargeError instead
            trials: Fuzz trial count (defaults to ``Settings.fuzz_trials``)
            seed: Fuzz generator seed

        Raises:
            InstanceTooLargeError: If an exhaustive run is requested beyond the size guards
        """
        settings = get_settings()
        report = VerificationReport()
        if d is not None:
            VerificationService._distance_checks(spec, d, report, exhaustive)
        if distortions is not None:
            if spec.mode is CodeMode.CORRECT:
                report.add(VerificationService.syndrome_check(spec, distortions, table))
            else:
                report.add(VerificationService.nonzero_check(spec, distortions))
            if report.passed:
                budget = settings.fuzz_trials if trials is None else trials
                if exhaustive:
                    if spec.info_bits > settings.max_info_bits or len(distortions) > settings.exhaustive_verify_limit:
                        raise InstanceTooLargeError("Exhaustive round trip is beyond the enumeration limits")
                    budget = (1 << spec.info_bits) * (len(distortions) + 1)
                report.merge(VerificationService.fuzz_roundtrip(spec, distortions, budget, seed, table))
        if not report.exhaustive:
            report.notes.append("round trip was sampled")
        logger.info(f"Verification {'passed' if report.passed else 'failed'} with {len(report.checks_run)} checks")
        return report

    @staticmethod
    def _distance_checks(spec: CodeSpec, d: int, report: VerificationReport, exhaustive: bool) -> None:
        settings = get_settings()
        counterexample = VerificationService.ball_nonzero_check(spec.hash, d)
        report.ball_check_max_weight = d - 1
        report.add(
            CheckResult(
                name="ball_nonzero",
                passed=counterexample is None,
                detail=f"B^{spec.L}_{d - 1} streamed",
                counterexample=[str(counterexample)] if counterexample is not None else [],
            )
        )
        if spec.info_bits > settings.max_info_bits:
            if exhaustive:
                raise InstanceTooLargeError(f"L - l = {spec.info_bits} exceeds the enumeration limit")
            report.notes.append(f"min_distance skipped: L - l = {spec.info_bits} > {settings.max_info_bits}")
            return
        distance = VerificationService.min_distance_bruteforce(spec)
        report.min_distance = distance
        if spec.info_bits > settings.pairwise_info_limit:
            report.notes.append("pairwise distance oracle skipped; weight oracle only")
        report.add(CheckResult(name="min_distance", passed=distance >= d, detail=f"{distance} (claimed >= {d})"))
        agree = (counterexample is None) == (distance >= d)
        report.add(
            CheckResult(
                name="ball_distance_agree",
                passed=agree,
                detail="ball check and distance oracle agree" if agree else "ball check and distance oracle disagree",
            )
        )
