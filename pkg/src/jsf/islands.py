import logging
from dataclasses import replace

import numpy as np
from scipy import ndimage

from core import settings
from core.errors import EmptyBandError
from jsf.kernel import JointSpectralKernel

logger = logging.getLogger(__name__)

# retained energy below this fraction counts as an empty window
MIN_RETAINED_FRACTION = 1e-12


def island_labels(
    kernel: JointSpectralKernel, threshold: float | None = None
) -> tuple[np.ndarray, int]:
    """Label 4-connected regions where |F|^2 exceeds ``threshold`` times its peak."""
    threshold = settings.ISLAND_THRESHOLD if threshold is None else threshold
    intensity = np.abs(kernel.normalized) ** 2
    mask = intensity > threshold * intensity.max()
    labels, count = ndimage.label(mask)
    return labels, int(count)


def count_islands(kernel: JointSpectralKernel, threshold: float | None = None) -> int:
    return island_labels(kernel, threshold)[1]


def restrict_to_island(
    kernel: JointSpectralKernel,
    signal_band: tuple[float, float],
    idler_band: tuple[float, float],
) -> JointSpectralKernel:
    """Hard rectangular window modelling the CWDM filters, then renormalize.

    The returned kernel records the fraction of energy the window removed.
    """
    for name, (low, high) in (("signal", signal_band), ("idler", idler_band)):
        if not low < high:
            raise ValueError(f"{name} band must have low < high, got ({low}, {high})")

    rows = kernel.signal_grid.index_range(*signal_band)
    cols = kernel.idler_grid.index_range(*idler_band)
    if rows.start >= rows.stop or cols.start >= cols.stop:
        raise EmptyBandError(
            f"bands {signal_band} x {idler_band} contain no grid points"
        )

    window = np.zeros(kernel.shape, dtype=bool)
    window[rows, cols] = True
    values = np.where(window, kernel.normalized, 0.0)
    retained = float(np.sum(np.abs(values) ** 2) * kernel.cell_area)
    if retained < MIN_RETAINED_FRACTION:
        raise EmptyBandError(
            f"bands {signal_band} x {idler_band} exclude the kernel support "
            f"(retained fraction {retained:.3e})"
        )

    discarded = 1.0 - retained
    logger.info(f"CWDM window keeps {retained:.4f} of the kernel energy")
    return replace(
        kernel,
        normalized=values / np.sqrt(retained),
        discarded_energy=discarded,
        description=f"{kernel.description} | window {signal_band} x {idler_band}",
    )


def kernel_intensity_grid(
    kernel: JointSpectralKernel, max_points: int = 128
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Strided |F|^2 samples (omega1, omega2, intensity) for heat maps."""
    step_s = max(1, -(-kernel.signal_grid.n_points // max_points))
    step_i = max(1, -(-kernel.idler_grid.n_points // max_points))
    return (
        kernel.signal_grid.omega[::step_s],
        kernel.idler_grid.omega[::step_i],
        kernel.intensity()[::step_s, ::step_i],
    )
