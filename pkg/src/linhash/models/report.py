"""Verification report returned by the oracles and printed by ``linhash verify``."""

from typing import Optional

from pydantic import BaseModel, Field, model_validator


class CheckResult(BaseModel):
    """Outcome of one named oracle.

    Attributes:
        name: Check identifier, e.g. ``ball_nonzero`` or ``syndrome_injective``
        passed: Whether the check held
        detail: Short free-text summary (counts, sizes, skipped reasons)
        counterexample: Digit strings of the word(s) that broke the check
    """

    name: str
    passed: bool
    detail: str = ""
    counterexample: list[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def _counterexample_only_on_failure(self) -> "CheckResult":
        if self.passed and self.counterexample:
            raise ValueError(f"Check {self.name} passed but carries a counterexample")
        return self


class VerificationReport(BaseModel):
    """Aggregate of every check run against one code.

    Attributes:
        checks_run: Individual check results, in execution order
        min_distance: Minimum distance of the encoding set when computed
        ball_check_max_weight: Largest weight streamed by the ball check (``d - 1``)
        exhaustive: False when any check sampled instead of enumerating
        notes: Degraded-path remarks (skipped oracles, sampled checks)
    """

    checks_run: list[CheckResult] = Field(default_factory=list)
    min_distance: Optional[int] = None
    ball_check_max_weight: Optional[int] = None
    exhaustive: bool = True
    notes: list[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks_run)

    @property
    def counterexample(self) -> Optional[list[str]]:
        """Counterexample of the first failed check, if any."""
        for c in self.checks_run:
            if not c.passed:
                return c.counterexample
        return None

    def add(self, result: CheckResult, exhaustive: bool = True) -> None:
        self.checks_run.append(result)
        if not exhaustive:
            self.exhaustive = False

    def merge(self, other: "VerificationReport") -> None:
        """Fold another report into this one."""
        self.checks_run.extend(other.checks_run)
        self.notes.extend(other.notes)
        self.exhaustive = self.exhaustive and other.exhaustive
        if other.min_distance is not None:
            self.min_distance = other.min_distance
        if other.ball_check_max_weight is not None:
            self.ball_check_max_weight = other.ball_check_max_weight

    def to_text(self) -> str:
        """Human-readable block."""
        lines = [f"Verification: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks_run:
            mark = "ok" if c.passed else "FAILED"
            line = f"  [{mark}] {c.name}"
            if c.detail:
                line += f": {c.detail}"
            lines.append(line)
            if c.counterexample:
                lines.append(f"         counterexample: {' '.join(c.counterexample)}")
        lines.append(f"  min_distance: {self.min_distance if self.min_distance is not None else 'not computed'}")
        if self.ball_check_max_weight is not None:
            lines.append(f"  ball_check_max_weight: {self.ball_check_max_weight}")
        lines.append(f"  exhaustive: {'yes' if self.exhaustive else 'no'}")
        for note in self.notes:
            lines.append(f"  note: {note}")
        return "\n".join(lines)

    def to_key_values(self) -> str:
        """Machine-readable ``key=value`` lines for CI."""
        out = [f"passed={str(self.passed).lower()}"]
        for c in self.checks_run:
            out.append(f"check.{c.name}={'pass' if c.passed else 'fail'}")
            if c.counterexample:
                out.append(f"check.{c.name}.counterexample={','.join(c.counterexample)}")
        out.append(f"min_distance={self.min_distance if self.min_distance is not None else 'none'}")
        if self.ball_check_max_weight is not None:
            out.append(f"ball_check_max_weight={self.ball_check_max_weight}")
        out.append(f"exhaustive={str(self.exhaustive).lower()}")
        return "\n".join(out)
