"""Fiber nonlinear interferometer: two DSF stages with a piece of SMF in between.

Grids are in units of the pump bandwidth sigma_p; the fiber phases are computed
in ps and km after scaling by the physical sigma_p from the pump FWHM.
"""

import logging
import math

import numpy as np
from scipy import constants
from scipy.optimize import brentq

from jsf.gaussian import pump_envelope
from jsf.kernel import JointSpectralKernel
from schema.specs import NliSpec, PumpSpec
from spectral import FrequencyGrid

logger = logging.getLogger(__name__)

SPEED_OF_LIGHT_NM_PER_PS = constants.c * 1e-3
FWHM_TO_SIGMA = 2 * math.sqrt(2 * math.log(2))


def sigma_p_rad_per_ps(nli: NliSpec) -> float:
    """rms angular bandwidth of the pump intensity from its FWHM in nm."""
    fwhm = 2 * math.pi * SPEED_OF_LIGHT_NM_PER_PS * nli.pump_fwhm_nm / nli.pump_wavelength_nm**2
    return fwhm / FWHM_TO_SIGMA


def beta2_from_dispersion(dispersion_ps_nm_km: float, wavelength_nm: float) -> float:
    """beta2 in ps^2/km from the dispersion parameter D."""
    return -dispersion_ps_nm_km * wavelength_nm**2 / (2 * math.pi * SPEED_OF_LIGHT_NM_PER_PS)


def dsf_beta2_at_pump(nli: NliSpec) -> float:
    dispersion = nli.dispersion_slope_ps_nm2_km * (nli.pump_wavelength_nm - nli.zero_dispersion_nm)
    return beta2_from_dispersion(dispersion, nli.pump_wavelength_nm)


def dsf_beta3(nli: NliSpec) -> float:
    """beta3 in ps^3/km from the GVD slope."""
    return (
        nli.dispersion_slope_ps_nm2_km
        * nli.pump_wavelength_nm**4
        / (2 * math.pi * SPEED_OF_LIGHT_NM_PER_PS) ** 2
    )


def smf_beta2(nli: NliSpec) -> float:
    return beta2_from_dispersion(nli.smf_dispersion_ps_nm_km, nli.pump_wavelength_nm)


def interference_factor(delta_beta: np.ndarray | float, length_km: float) -> np.ndarray:
    """cos(delta_beta L / 2) exp(i delta_beta L / 2) of the two-stage interferometer."""
    phase = np.asarray(delta_beta) * length_km / 2
    return np.cos(phase) * np.exp(1j * phase)


def interference_zeros(length_km: float, delta_beta_max: float) -> np.ndarray:
    """Positive delta_beta at which the interference factor vanishes: (2n + 1) pi / L."""
    if length_km <= 0:
        return np.zeros(0)
    spacing = 2 * math.pi / length_km
    n_max = int(math.floor((delta_beta_max * length_km / math.pi - 1) / 2))
    return (2 * np.arange(n_max + 1) + 1) * spacing / 2


def find_interference_zeros(
    length_km: float, delta_beta_max: float, samples: int = 4096
) -> np.ndarray:
    """Root-find the zeros of Re-amplitude cos(delta_beta L / 2) on (0, delta_beta_max]."""
    delta_beta = np.linspace(0.0, delta_beta_max, samples)
    amplitude = np.cos(delta_beta * length_km / 2)
    roots = []
    for i in np.nonzero(np.sign(amplitude[:-1]) * np.sign(amplitude[1:]) < 0)[0]:
        roots.append(
            brentq(
                lambda x: math.cos(x * length_km / 2), delta_beta[i], delta_beta[i + 1], xtol=1e-14
            )
        )
    return np.asarray(roots)


def _detunings(
    pump: PumpSpec, nli: NliSpec, signal_grid: FrequencyGrid, idler_grid: FrequencyGrid
) -> tuple[np.ndarray, np.ndarray]:
    """Half-sum and half-difference detunings in rad/ps."""
    scale = sigma_p_rad_per_ps(nli) / pump.bandwidth_sigma_p
    w1 = signal_grid.omega[:, None] * scale
    w2 = idler_grid.omega[None, :] * scale
    return (w1 + w2) / 2, (w2 - w1) / 2


def dsf_phase_mismatch(
    pump: PumpSpec, nli: NliSpec, signal_grid: FrequencyGrid, idler_grid: FrequencyGrid
) -> np.ndarray:
    """delta_k = (beta2_p + beta3 S) D^2 in 1/km, S and D the half-sum and half-difference."""
    half_sum, half_diff = _detunings(pump, nli, signal_grid, idler_grid)
    delta_k = (dsf_beta2_at_pump(nli) + dsf_beta3(nli) * half_sum) * half_diff**2
    if not np.all(np.isfinite(delta_k)):
        raise ValueError("phase mismatch is not finite; check the dispersion parameters")
    return delta_k


def smf_phase(
    pump: PumpSpec, nli: NliSpec, signal_grid: FrequencyGrid, idler_grid: FrequencyGrid
) -> np.ndarray:
    """delta_beta_smf * L_smf, the relative phase picked up between the two stages."""
    _, half_diff = _detunings(pump, nli, signal_grid, idler_grid)
    theta = smf_beta2(nli) * half_diff**2 * nli.smf_length_m * 1e-3
    if not np.all(np.isfinite(theta)):
        raise ValueError("SMF phase is not finite; check the dispersion parameters")
    return theta


def _single_dsf_values(
    pump: PumpSpec, nli: NliSpec, signal_grid: FrequencyGrid, idler_grid: FrequencyGrid
) -> np.ndarray:
    w1 = signal_grid.omega[:, None]
    w2 = idler_grid.omega[None, :]
    mismatch = dsf_phase_mismatch(pump, nli, signal_grid, idler_grid)
    half_phase = mismatch * nli.dsf_length_m * 1e-3 / 2
    phase_matching = np.sinc(half_phase / np.pi) * np.exp(1j * half_phase)
    return pump_envelope(pump, w1 + w2) * phase_matching


def build_single_dsf_jsf(
    pump: PumpSpec,
    nli: NliSpec,
    G: float,
    signal_grid: FrequencyGrid,
    idler_grid: FrequencyGrid,
) -> JointSpectralKernel:
    return JointSpectralKernel.from_values(
        signal_grid,
        idler_grid,
        _single_dsf_values(pump, nli, signal_grid, idler_grid),
        G,
        description=f"single dsf L={nli.dsf_length_m}m",
    )


def build_nli_jsf(
    pump: PumpSpec,
    nli: NliSpec,
    G: float,
    signal_grid: FrequencyGrid,
    idler_grid: FrequencyGrid,
) -> JointSpectralKernel:
    """Single-DSF kernel times the interference factor accumulated in the SMF."""
    if G < 0:
        raise ValueError(f"G must be >= 0, got {G}")
    theta = smf_phase(pump, nli, signal_grid, idler_grid)
    values = _single_dsf_values(pump, nli, signal_grid, idler_grid) * np.cos(theta / 2) * np.exp(
        1j * theta / 2
    )
    kernel = JointSpectralKernel.from_values(
        signal_grid,
        idler_grid,
        values,
        G,
        description=f"nli dsf={nli.dsf_length_m}m smf={nli.smf_length_m}m",
    )
    logger.debug(
        f"Built {kernel.description}: sigma_p={sigma_p_rad_per_ps(nli):.5f} rad/ps, "
        f"beta2_p={dsf_beta2_at_pump(nli):.5f} ps^2/km, beta2_smf={smf_beta2(nli):.3f} ps^2/km"
    )
    return kernel


def smf_gap_detunings(pump: PumpSpec, nli: NliSpec, orders: list[int]) -> list[float]:
    """Half-difference detunings (grid units) where |theta_smf| = m pi for odd m."""
    if nli.smf_length_m == 0:
        return []
    scale = sigma_p_rad_per_ps(nli) / pump.bandwidth_sigma_p
    per_unit = abs(smf_beta2(nli)) * nli.smf_length_m * 1e-3 * scale**2
    return [math.sqrt(m * math.pi / per_unit) for m in orders]
