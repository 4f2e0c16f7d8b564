from iteration.extract import (
    ModeExtractionResult,
    default_seed,
    extract_all_modes,
    extract_mode,
    extract_mode_numbers,
    gains_from_power_gains,
    mode_numbers_from_gains,
)
from iteration.feedback import detect_zeros, pi_jump_signs, reconstruct_real_field

__all__ = [
    "ModeExtractionResult",
    "default_seed",
    "detect_zeros",
    "extract_all_modes",
    "extract_mode",
    "extract_mode_numbers",
    "gains_from_power_gains",
    "mode_numbers_from_gains",
    "pi_jump_signs",
    "reconstruct_real_field",
]
