"""Line-based text persistence of codes and syndrome tables.

Layout::

    LINHASH v1
    L=6
    l=4
    mode=correct
    checks=1,2,3,4
    1000            (L table lines, v_1 .. v_L)
    ...
    SYNDROMES       (optional, correction codes only)
    0111 000011     (syndrome, distortion)
    # key=value     (metadata, sorted by key)
"""

import logging
import re
from pathlib import Path
from typing import Optional

from ..models.bitword import BitWord
from ..models.code_spec import CodeMode, CodeSpec, SyndromeTable
from ..models.errors import (
    CodeFileParseError,
    InvariantViolationError,
    SyndromeCollisionError,
    WordLengthError,
)
from ..models.hash_function import LinearHashFunction

logger = logging.getLogger(__name__)

HEADER = "LINHASH v1"
SYNDROME_MARKER = "SYNDROMES"
_DIGITS = re.compile(r"^[01]+$")
_META = re.compile(r"^# ([A-Za-z0-9_.-]+)=(.*)$")


def _int_field(lines: list[str], index: int, key: str) -> int:
    number = index + 1
    if index >= len(lines):
        raise CodeFileParseError(number, f"missing '{key}=' line")
    prefix = f"{key}="
    line = lines[index]
    if not line.startswith(prefix) or not line[len(prefix) :].isdigit():
        raise CodeFileParseError(number, f"expected '{key}=<integer>', got '{line}'")
    return int(line[len(prefix) :])


class CodeFileService:
    """Save and load ``CodeSpec`` (plus an optional ``SyndromeTable``) bit-exactly."""

    @staticmethod
    def dumps(spec: CodeSpec, table: Optional[SyndromeTable] = None) -> str:
        lines = [
            HEADER,
            f"L={spec.L}",
            f"l={spec.check_bits}",
            f"mode={spec.mode.value}",
            "checks=" + ",".join(str(p) for p in spec.check_positions),
        ]
        lines.extend(spec.hash.rows())
        if table is not None:
            lines.append(SYNDROME_MARKER)
            lines.extend(f"{s} {d}" for s, d in table.entries.items())
        for key in sorted(spec.provenance):
            value = spec.provenance[key]
            if "\n" in value or not _META.match(f"# {key}={value}"):
                raise ValueError(f"Metadata entry {key!r} cannot be written on one line")
            lines.append(f"# {key}={value}")
        return "\n".join(lines) + "\n"

    @staticmethod
    def save(spec: CodeSpec, table: Optional[SyndromeTable], path: Path | str) -> None:
        Path(path).write_text(CodeFileService.dumps(spec, table), encoding="utf-8", newline="\n")
        logger.info(f"Saved code L={spec.L}, l={spec.check_bits} to {path}")

    @staticmethod
    def load(path: Path | str) -> tuple[CodeSpec, Optional[SyndromeTable]]:
        """Parse and validate a code file.

        Raises:
            CodeFileParseError: With the 1-based line number of the first malformed line
            InvariantViolationError: Naming the first structural invariant that fails
        """
        return CodeFileService.loads(Path(path).read_text(encoding="utf-8"))

    @staticmethod
    def loads(text: str) -> tuple[CodeSpec, Optional[SyndromeTable]]:
        if not text.endswith("\n"):
            raise CodeFileParseError(max(1, text.count("\n") + 1), "file must end with a line feed")
        lines = text[:-1].split("\n")
        if lines[0] != HEADER:
            raise CodeFileParseError(1, f"expected header '{HEADER}'")
        L = _int_field(lines, 1, "L")
        if L < 2:
            raise CodeFileParseError(2, f"need L >= 2, got L={L}")
        check_bits = _int_field(lines, 2, "l")
        if not 1 <= check_bits < L:
            raise CodeFileParseError(3, f"need 1 <= l < L, got l={check_bits}, L={L}")
        mode = CodeFileService._parse_mode(lines)
        checks = CodeFileService._parse_checks(lines)

        rows: list[str] = []
        for index in range(5, 5 + L):
            if index >= len(lines):
                raise CodeFileParseError(index + 1, f"expected {L} table lines, found {len(rows)}")
            row = lines[index]
            if not _DIGITS.match(row) or len(row) != check_bits:
                raise CodeFileParseError(index + 1, f"table line must be {check_bits} binary digits, got '{row}'")
            rows.append(row)
        h = LinearHashFunction.from_strings(rows)

        index = 5 + L
        entries: Optional[dict[BitWord, BitWord]] = None
        if index < len(lines) and lines[index] == SYNDROME_MARKER:
            entries = {}
            index += 1
            while index < len(lines) and not lines[index].startswith("#"):
                s, d = CodeFileService._parse_pair(lines[index], index + 1, check_bits, L)
                if s in entries:
                    raise CodeFileParseError(index + 1, f"syndrome {s} listed twice")
                entries[s] = d
                index += 1

        provenance: dict[str, str] = {}
        for number in range(index + 1, len(lines) + 1):
            match = _META.match(lines[number - 1])
            if not match:
                raise CodeFileParseError(number, f"unexpected line '{lines[number - 1]}'")
            key, value = match.groups()
            if key in provenance:
                raise CodeFileParseError(number, f"metadata key '{key}' repeated")
            provenance[key] = value
        if list(provenance) != sorted(provenance):
            raise CodeFileParseError(index + 1, "metadata keys must be sorted")

        spec = CodeSpec(h, checks, mode, provenance)
        table = CodeFileService._build_table(spec, entries)
        logger.info(f"Loaded code L={L}, l={check_bits}, mode={mode.value}")
        return spec, table

    @staticmethod
    def _parse_mode(lines: list[str]) -> CodeMode:
        if len(lines) < 4 or not lines[3].startswith("mode="):
            raise CodeFileParseError(4, "expected 'mode=detect' or 'mode=correct'")
        try:
            return CodeMode(lines[3][len("mode=") :])
        except ValueError as e:
            raise CodeFileParseError(4, f"unknown mode '{lines[3][len('mode='):]}'") from e

    @staticmethod
    def _parse_checks(lines: list[str]) -> tuple[int, ...]:
        if len(lines) < 5 or not lines[4].startswith("checks="):
            raise CodeFileParseError(5, "expected 'checks=<comma list>'")
        parts = lines[4][len("checks=") :].split(",")
        if not all(p.isdigit() for p in parts):
            raise CodeFileParseError(5, f"check positions must be integers, got '{lines[4]}'")
        return tuple(int(p) for p in parts)

    @staticmethod
    def _parse_pair(line: str, number: int, check_bits: int, L: int) -> tuple[BitWord, BitWord]:
        parts = line.split(" ")
        if len(parts) != 2:
            raise CodeFileParseError(number, f"expected 'syndrome distortion', got '{line}'")
        try:
            s, d = BitWord.from_string(parts[0]), BitWord.from_string(parts[1])
        except WordLengthError as e:
            raise CodeFileParseError(number, str(e)) from e
        if s.length != check_bits or d.length != L:
            raise CodeFileParseError(number, f"expected {check_bits}-bit syndrome and {L}-bit distortion")
        return s, d

    @staticmethod
    def _build_table(spec: CodeSpec, entries: Optional[dict[BitWord, BitWord]]) -> Optional[SyndromeTable]:
        if entries is None:
            return None
        if spec.mode is not CodeMode.CORRECT:
            raise InvariantViolationError("syndromes-need-correct-mode", "detection codes carry no syndrome table")
        for s, d in entries.items():
            if spec.hash.evaluate(d) != s:
                raise InvariantViolationError("syndrome-consistent", f"{d} hashes to {spec.hash.evaluate(d)}, not {s}")
        try:
            return SyndromeTable(entries)
        except SyndromeCollisionError as e:
            raise InvariantViolationError("syndrome-injective", str(e)) from e
