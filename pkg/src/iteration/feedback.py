"""Rebuilding a real amplitude from an intensity-only spectrum (pi-jump heuristic)."""

import numpy as np

from spectral import FrequencyGrid, SpectralField

# flips closer than this many bins count as one zero
MERGE_DISTANCE = 2


def detect_zeros(spectrum: np.ndarray, threshold: float) -> list[int]:
    """Indices where the sign of the amplitude flips.

    A zero is a local minimum below ``threshold`` times the peak, strictly inside
    the support (first to last bin above threshold). The flip starts on the side
    of the minimum where the spectrum is lower.
    """
    spectrum = np.asarray(spectrum, dtype=float)
    peak = spectrum.max()
    if peak <= 0:
        return []
    level = threshold * peak
    support = np.nonzero(spectrum > level)[0]
    if support.size < 2:
        return []
    first, last = int(support[0]), int(support[-1])

    flips: list[int] = []
    for j in range(first + 1, last):
        left, here, right = spectrum[j - 1], spectrum[j], spectrum[j + 1]
        if here > level or here > left or here >= right:
            continue
        start = j if left < right else j + 1
        if flips and start - flips[-1] <= MERGE_DISTANCE:
            continue
        flips.append(start)
    return flips


def pi_jump_signs(spectrum: np.ndarray, threshold: float) -> np.ndarray:
    signs = np.ones(len(spectrum))
    for start in detect_zeros(spectrum, threshold):
        signs[start:] *= -1
    return signs


def reconstruct_real_field(
    grid: FrequencyGrid, spectrum: np.ndarray, threshold: float
) -> SpectralField:
    """sqrt of the measured spectrum with alternating signs between detected zeros."""
    amplitude = np.sqrt(np.clip(spectrum, 0.0, None))
    return SpectralField(grid, amplitude * pi_jump_signs(spectrum, threshold))
