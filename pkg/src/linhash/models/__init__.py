from .bitword import BitWord, ball, hamming_distance, iter_words_in_order, order_key, unit, weight, xor
from .code_spec import (
    Algorithm,
    BoundedWeightParams,
    CodeMode,
    CodeSpec,
    ConstructionTrace,
    DecodeOutcome,
    DecodeStatus,
    GeneralCodeResult,
    SyndromeTable,
)
from .distortion import BurstVariant, DistortionKind, DistortionSet
from .errors import (
    ChoiceSetEmptyError,
    CodeFileParseError,
    ConstructionFailedError,
    DistortionSetError,
    FrameError,
    InstanceTooLargeError,
    InternalExhaustionError,
    InvariantViolationError,
    LinHashError,
    NoSolutionError,
    OracleDisagreementError,
    SyndromeCollisionError,
    ValidationError,
    WordLengthError,
)
from .hash_function import LinearHashFunction, evaluate, image, linearity_check
from .report import CheckResult, VerificationReport

__all__ = [
    "Algorithm",
    "BitWord",
    "BoundedWeightParams",
    "BurstVariant",
    "CheckResult",
    "ChoiceSetEmptyError",
    "CodeFileParseError",
    "CodeMode",
    "CodeSpec",
    "ConstructionFailedError",
    "ConstructionTrace",
    "DecodeOutcome",
    "DecodeStatus",
    "DistortionKind",
    "DistortionSet",
    "DistortionSetError",
    "FrameError",
    "GeneralCodeResult",
    "InstanceTooLargeError",
    "InternalExhaustionError",
    "InvariantViolationError",
    "LinHashError",
    "LinearHashFunction",
    "NoSolutionError",
    "OracleDisagreementError",
    "SyndromeCollisionError",
    "SyndromeTable",
    "ValidationError",
    "VerificationReport",
    "WordLengthError",
    "ball",
    "evaluate",
    "hamming_distance",
    "image",
    "iter_words_in_order",
    "linearity_check",
    "order_key",
    "unit",
    "weight",
    "xor",
]
