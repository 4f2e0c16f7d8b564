"""Optical spectrum analyzer model: intensity only, phases are lost."""

import numpy as np
from scipy.ndimage import uniform_filter1d

from spectral import FrequencyGrid, SpectralField


def linear_response(grid: FrequencyGrid, tilt: float) -> np.ndarray:
    """Detector response 1 + tilt * (omega - center) / half-span, flat for tilt = 0."""
    if not -1 < tilt < 1:
        raise ValueError(f"tilt must lie in (-1, 1) to keep the response positive, got {tilt}")
    return 1.0 + tilt * (grid.omega - grid.center) / (grid.span / 2)


def measure_spectrum(
    field: SpectralField,
    noise_floor: float = 0.0,
    response: np.ndarray | None = None,
    resolution_bins: int = 1,
) -> np.ndarray:
    """|a_j|^2 per bin, times the detector response, boxcar-smoothed, plus a flat floor."""
    if noise_floor < 0:
        raise ValueError(f"noise floor must be non-negative, got {noise_floor}")
    if resolution_bins < 1:
        raise ValueError(f"resolution_bins must be >= 1, got {resolution_bins}")

    spectrum = field.intensity()
    if response is not None:
        response = np.asarray(response, dtype=float)
        if response.shape != spectrum.shape:
            raise ValueError(
                f"response has shape {response.shape}, spectrum has {spectrum.shape}"
            )
        if np.any(response < 0):
            raise ValueError("detector response must be non-negative")
        spectrum = spectrum * response
    if resolution_bins > 1:
        spectrum = uniform_filter1d(spectrum, size=resolution_bins, mode="nearest")
    return spectrum + noise_floor
