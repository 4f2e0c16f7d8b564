"""Double-Gaussian joint spectral function with an optionally chirped pump."""

import logging
import math

import numpy as np

from jsf.kernel import JointSpectralKernel
from schema.specs import PumpSpec
from spectral import FrequencyGrid

logger = logging.getLogger(__name__)


def pump_envelope(pump: PumpSpec, pump_detuning: np.ndarray) -> np.ndarray:
    """exp(-Omega^2 / 4 sigma_p^2) exp(i c Omega^2 / 2 sigma_p^2).

    Omega is the pump detuning Omega1 + Omega2 minus the pump center.
    """
    omega = pump_detuning - pump.center_detuning
    sigma_sq = pump.bandwidth_sigma_p**2
    chirp = pump.chirp_coefficient
    return np.exp(-(omega**2) / (4 * sigma_sq) + 1j * chirp * omega**2 / (2 * sigma_sq))


def separable_angle(pump: PumpSpec, sigma_m: float) -> float:
    """Correlation angle at which the chirp-free kernel factorizes.

    The Omega1 * Omega2 cross term cancels when sin(2 theta) = 2 sigma_m^2 / sigma_p^2,
    which needs sigma_m <= sigma_p / sqrt(2).
    """
    ratio = 2 * sigma_m**2 / pump.bandwidth_sigma_p**2
    if not 0 < ratio <= 1:
        raise ValueError(
            f"no separable angle for sigma_m={sigma_m}, sigma_p={pump.bandwidth_sigma_p}"
        )
    return 0.5 * math.asin(ratio)


def build_gaussian_jsf(
    pump: PumpSpec,
    correlation_angle: float,
    G: float,
    signal_grid: FrequencyGrid,
    idler_grid: FrequencyGrid,
    sigma_m: float = 1.0,
) -> JointSpectralKernel:
    """Pump envelope times a Gaussian phase-matching function along the correlation angle.

    Args:
        pump: Pump bandwidth, center and chirp.
        correlation_angle: theta in radians; 45 degrees gives a signal/idler symmetric kernel.
        G: Overall strength, proportional to the peak pump amplitude.
        signal_grid: Omega1 axis.
        idler_grid: Omega2 axis.
        sigma_m: Width of the phase-matching function.
    """
    if pump.bandwidth_sigma_p <= 0:
        raise ValueError("pump bandwidth must be positive")
    if sigma_m <= 0:
        raise ValueError(f"sigma_m must be positive, got {sigma_m}")
    if G < 0:
        raise ValueError(f"G must be >= 0, got {G}")

    w1 = signal_grid.omega[:, None]
    w2 = idler_grid.omega[None, :]
    envelope = pump_envelope(pump, w1 + w2)
    matching = np.exp(
        -((w1 * math.sin(correlation_angle) - w2 * math.cos(correlation_angle)) ** 2)
        / (4 * sigma_m**2)
    )
    kernel = JointSpectralKernel.from_values(
        signal_grid,
        idler_grid,
        envelope * matching,
        G,
        description=(
            f"gaussian theta={math.degrees(correlation_angle):.3f}deg "
            f"sigma_m={sigma_m} chirp={pump.chirp_coefficient}"
        ),
    )
    logger.debug(f"Built {kernel.description} on {kernel.shape} grid, G={G}")
    return kernel
