from collections.abc import Sequence
from pathlib import Path

import numpy as np
import pandas as pd

from iteration.extract import ModeExtractionResult
from spectral import SpectralField, inner_product
from spectral.io import FLOAT_FORMAT


def trace_frame(result: ModeExtractionResult) -> pd.DataFrame:
    """One row per amplification step: overlap with the next iterate and the gain estimate."""
    steps = np.arange(1, result.iterations_used + 1)
    overlaps = np.full(result.iterations_used, np.nan)
    overlaps[: result.overlap_history.size] = result.overlap_history
    return pd.DataFrame(
        {
            "step": steps,
            "overlap": overlaps,
            "gain_estimate": result.gain_history[: result.iterations_used],
        }
    )


def write_trace_csv(result: ModeExtractionResult, path: Path) -> Path:
    trace_frame(result).to_csv(path, index=False, float_format=FLOAT_FORMAT)
    return path


def iterate_errors(iterates: Sequence[SpectralField], reference: SpectralField) -> np.ndarray:
    """|a_N - <psi, a_N> psi| for each normalized iterate against a normalized reference mode."""
    errors = []
    for iterate in iterates:
        unit = iterate.normalized()
        residual = unit - reference * inner_product(reference, unit)
        errors.append(residual.norm())
    return np.asarray(errors)


def fit_decay_rate(errors: np.ndarray, first_step: int = 6, floor: float = 1e-11) -> float:
    """Slope of log(error) against step, over steps >= first_step with error above floor."""
    steps = np.arange(errors.size)
    mask = (steps >= first_step) & (errors > floor)
    if mask.sum() < 3:
        raise ValueError(f"only {int(mask.sum())} usable points for the decay fit")
    slope, _ = np.polyfit(steps[mask], np.log(errors[mask]), 1)
    return float(slope)
