from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from core.errors import EmptyFieldError, GridMismatchError


@dataclass(frozen=True)
class FrequencyGrid:
    """Uniform angular-frequency axis, in units of the pump bandwidth."""

    omega_min: float
    omega_max: float
    n_points: int

    def __post_init__(self) -> None:
        if self.n_points < 2:
            raise ValueError(f"n_points must be >= 2, got {self.n_points}")
        if not np.isfinite(self.omega_min) or not np.isfinite(self.omega_max):
            raise ValueError("grid bounds must be finite")
        if self.omega_max <= self.omega_min:
            raise ValueError(
                f"omega_max ({self.omega_max}) must exceed omega_min ({self.omega_min})"
            )

    @classmethod
    def symmetric(cls, half_width: float, n_points: int) -> FrequencyGrid:
        return cls(-half_width, half_width, n_points)

    @property
    def d_omega(self) -> float:
        return (self.omega_max - self.omega_min) / (self.n_points - 1)

    @property
    def span(self) -> float:
        return self.omega_max - self.omega_min

    @property
    def center(self) -> float:
        return 0.5 * (self.omega_min + self.omega_max)

    @cached_property
    def omega(self) -> np.ndarray:
        return np.linspace(self.omega_min, self.omega_max, self.n_points)

    def index_range(self, low: float, high: float) -> slice:
        """Slice of grid points with low <= omega <= high."""
        start = int(np.searchsorted(self.omega, low, side="left"))
        stop = int(np.searchsorted(self.omega, high, side="right"))
        return slice(start, stop)

    def to_dict(self) -> dict[str, float | int]:
        return {
            "omega_min": self.omega_min,
            "omega_max": self.omega_max,
            "n_points": self.n_points,
        }


def require_same_grid(*grids: FrequencyGrid) -> FrequencyGrid:
    first = grids[0]
    for other in grids[1:]:
        if other != first:
            raise GridMismatchError(f"incompatible grids: {first} vs {other}")
    return first


@dataclass(frozen=True, eq=False)
class SpectralField:
    """Complex spectral amplitude sampled on a FrequencyGrid."""

    grid: FrequencyGrid
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        amplitudes = np.asarray(self.amplitudes, dtype=np.complex128)
        if amplitudes.shape != (self.grid.n_points,):
            raise ValueError(
                f"expected {self.grid.n_points} amplitudes, got shape {amplitudes.shape}"
            )
        amplitudes.setflags(write=False)
        object.__setattr__(self, "amplitudes", amplitudes)

    @classmethod
    def zeros(cls, grid: FrequencyGrid) -> SpectralField:
        return cls(grid, np.zeros(grid.n_points, dtype=np.complex128))

    def norm_squared(self) -> float:
        return float(np.vdot(self.amplitudes, self.amplitudes).real * self.grid.d_omega)

    def norm(self) -> float:
        return float(np.sqrt(self.norm_squared()))

    def normalized(self) -> SpectralField:
        norm = self.norm()
        if norm == 0.0:
            raise EmptyFieldError("cannot normalize a zero-norm field")
        return SpectralField(self.grid, self.amplitudes / norm)

    def is_normalized(self, tolerance: float = 1e-10) -> bool:
        return abs(self.norm_squared() - 1.0) < tolerance

    def with_phase(self, phase: float) -> SpectralField:
        return SpectralField(self.grid, self.amplitudes * np.exp(1j * phase))

    def intensity(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def __add__(self, other: SpectralField) -> SpectralField:
        require_same_grid(self.grid, other.grid)
        return SpectralField(self.grid, self.amplitudes + other.amplitudes)

    def __sub__(self, other: SpectralField) -> SpectralField:
        require_same_grid(self.grid, other.grid)
        return SpectralField(self.grid, self.amplitudes - other.amplitudes)

    def __mul__(self, scalar: complex) -> SpectralField:
        return SpectralField(self.grid, self.amplitudes * scalar)

    __rmul__ = __mul__

    def __truediv__(self, scalar: complex) -> SpectralField:
        return SpectralField(self.grid, self.amplitudes / scalar)

    def __neg__(self) -> SpectralField:
        return SpectralField(self.grid, -self.amplitudes)


@dataclass(frozen=True, eq=False)
class TemporalProfile:
    """f(tau) = integral d omega psi(omega) exp(-i omega tau) on a uniform time grid.

    The norm carries the 1/2pi of the Fourier pair so that it equals the
    spectral norm of the field it came from.
    """

    times: np.ndarray
    values: np.ndarray

    @property
    def d_tau(self) -> float:
        return float(self.times[1] - self.times[0])

    def norm_squared(self) -> float:
        return float(np.sum(np.abs(self.values) ** 2) * self.d_tau / (2 * np.pi))

    def norm(self) -> float:
        return float(np.sqrt(self.norm_squared()))

    def intensity(self) -> np.ndarray:
        return np.abs(self.values) ** 2
