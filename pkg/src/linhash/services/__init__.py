from .bounded_weight_service import BoundedWeightService
from .bounds import (
    ZSizeVariant,
    ceil_log2,
    check_bits_improved,
    check_bits_vg,
    success_bound,
    success_bound_product,
    vg_bound,
    z_size,
)
from .codec_service import CodecService
from .codefile_service import CodeFileService
from .distortion_service import CorrectionStep, DistortionService
from .general_code_service import GeneralCodeService
from .input_validation_service import InputValidationService
from .verification_service import VerificationService

__all__ = [
    "BoundedWeightService",
    "CodeFileService",
    "CodecService",
    "CorrectionStep",
    "DistortionService",
    "GeneralCodeService",
    "InputValidationService",
    "VerificationService",
    "ZSizeVariant",
    "ceil_log2",
    "check_bits_improved",
    "check_bits_vg",
    "success_bound",
    "success_bound_product",
    "vg_bound",
    "z_size",
]
