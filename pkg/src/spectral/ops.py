import logging
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from core import settings
from core.errors import EmptyFieldError
from spectral.grid import FrequencyGrid, SpectralField, TemporalProfile, require_same_grid

logger = logging.getLogger(__name__)


def inner_product(a: SpectralField, b: SpectralField) -> complex:
    """<a, b> = sum_j conj(a_j) b_j d_omega, antilinear in the first argument."""
    grid = require_same_grid(a.grid, b.grid)
    return complex(np.vdot(a.amplitudes, b.amplitudes) * grid.d_omega)


def overlap(a: SpectralField, b: SpectralField) -> float:
    """|<a, b>| / (|a| |b|), insensitive to global phase and scale."""
    norm = a.norm() * b.norm()
    if norm == 0.0:
        raise EmptyFieldError("overlap with a zero-norm field is undefined")
    return abs(inner_product(a, b)) / norm


def gram_matrix(fields: Sequence[SpectralField]) -> np.ndarray:
    """G_kl = <f_k, f_l>."""
    if not fields:
        return np.zeros((0, 0), dtype=np.complex128)
    grid = require_same_grid(*(f.grid for f in fields))
    stacked = np.stack([f.amplitudes for f in fields])
    return stacked.conj() @ stacked.T * grid.d_omega


def orthonormality_error(fields: Sequence[SpectralField]) -> float:
    """max_kl |<f_k, f_l> - delta_kl|; zero for an empty set."""
    if not fields:
        return 0.0
    gram = gram_matrix(fields)
    return float(np.max(np.abs(gram - np.eye(len(fields)))))


@dataclass(frozen=True, eq=False)
class ProjectionResult:
    remainder: SpectralField
    coefficients: np.ndarray
    degenerate: bool

    @property
    def remainder_norm(self) -> float:
        return self.remainder.norm()


def gram_schmidt_project_out(
    field: SpectralField,
    basis: Sequence[SpectralField],
    floor: float | None = None,
    tolerance: float | None = None,
) -> ProjectionResult:
    """Remove the components of ``field`` along an orthonormal ``basis``.

    Returns the remainder a - sum_i <psi_i, a> psi_i together with the
    coefficients. The remainder is flagged degenerate when its norm drops below
    ``floor`` times the norm of the input.
    """
    floor = settings.DEGENERATE_FLOOR if floor is None else floor
    tolerance = settings.ORTHONORMAL_TOLERANCE if tolerance is None else tolerance

    input_norm = field.norm()
    if input_norm == 0.0:
        raise EmptyFieldError("cannot project a zero-norm field")
    if not basis:
        return ProjectionResult(field, np.zeros(0, dtype=np.complex128), False)

    grid = require_same_grid(field.grid, *(b.grid for b in basis))
    error = orthonormality_error(basis)
    if error > tolerance:
        raise ValueError(f"basis is not orthonormal: max |<b_k, b_l> - delta_kl| = {error:.3e}")

    modes = np.stack([b.amplitudes for b in basis])
    remainder = np.array(field.amplitudes)
    coefficients = np.zeros(len(basis), dtype=np.complex128)
    # two sweeps of modified Gram-Schmidt keep the remainder orthogonal to rounding
    for _ in range(2):
        for i, mode in enumerate(modes):
            xi = np.vdot(mode, remainder) * grid.d_omega
            remainder -= xi * mode
            coefficients[i] += xi

    result = SpectralField(grid, remainder)
    degenerate = result.norm() < floor * input_norm
    if degenerate:
        logger.debug(
            f"Degenerate remainder: |a'| = {result.norm():.3e} of |a| = {input_norm:.3e}"
        )
    return ProjectionResult(result, coefficients, degenerate)


def time_axis(grid: FrequencyGrid) -> np.ndarray:
    """tau_m = (m - N//2) d_tau with d_tau = 2 pi / (N d_omega)."""
    n = grid.n_points
    d_tau = 2 * np.pi / (n * grid.d_omega)
    return (np.arange(n) - n // 2) * d_tau


def to_temporal(field: SpectralField) -> TemporalProfile:
    """Discrete synthesis of f(tau) = integral d omega a(omega) exp(-i omega tau).

    The time grid covers one period 2 pi / d_omega, centered on tau = 0, which
    makes the discrete Parseval relation exact.
    """
    grid = field.grid
    times = time_axis(grid)
    spectrum = np.fft.fftshift(np.fft.fft(field.amplitudes))
    values = grid.d_omega * np.exp(-1j * grid.omega_min * times) * spectrum
    return TemporalProfile(times, values)
