from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from core.errors import EmptyFieldError
from spectral import FrequencyGrid


@dataclass(frozen=True, eq=False)
class JointSpectralKernel:
    """Discretized joint spectral function F(omega1, omega2) = G * f(omega1, omega2).

    ``normalized`` holds f with sum |f|^2 d_omega1 d_omega2 = 1, so the mode
    structure survives G = 0.
    """

    signal_grid: FrequencyGrid
    idler_grid: FrequencyGrid
    normalized: np.ndarray
    strength_G: float
    discarded_energy: float = 0.0
    description: str = field(default="")

    def __post_init__(self) -> None:
        values = np.asarray(self.normalized, dtype=np.complex128)
        expected = (self.signal_grid.n_points, self.idler_grid.n_points)
        if values.shape != expected:
            raise ValueError(f"kernel shape {values.shape} does not match grids {expected}")
        if not np.all(np.isfinite(values)):
            raise ValueError("kernel has non-finite entries")
        if not np.isfinite(self.strength_G) or self.strength_G < 0:
            raise ValueError(f"strength G must be finite and >= 0, got {self.strength_G}")
        values.setflags(write=False)
        object.__setattr__(self, "normalized", values)

    @classmethod
    def from_values(
        cls,
        signal_grid: FrequencyGrid,
        idler_grid: FrequencyGrid,
        values: np.ndarray,
        strength_G: float,
        description: str = "",
    ) -> JointSpectralKernel:
        """Normalize an arbitrary-scale kernel shape and attach the strength G."""
        values = np.asarray(values, dtype=np.complex128)
        if not np.all(np.isfinite(values)):
            raise ValueError("kernel has non-finite entries")
        weight = signal_grid.d_omega * idler_grid.d_omega
        energy = float(np.sum(np.abs(values) ** 2) * weight)
        if energy == 0.0:
            raise EmptyFieldError("kernel has no support on the grids")
        return cls(
            signal_grid,
            idler_grid,
            values / np.sqrt(energy),
            strength_G,
            description=description,
        )

    @property
    def matrix(self) -> np.ndarray:
        return self.strength_G * self.normalized

    @property
    def shape(self) -> tuple[int, int]:
        return self.signal_grid.n_points, self.idler_grid.n_points

    @property
    def cell_area(self) -> float:
        return self.signal_grid.d_omega * self.idler_grid.d_omega

    def norm_squared(self) -> float:
        """sum |f|^2 d_omega1 d_omega2; 1 for every valid kernel."""
        return float(np.sum(np.abs(self.normalized) ** 2) * self.cell_area)

    def intensity(self) -> np.ndarray:
        return np.abs(self.matrix) ** 2

    def with_strength(self, strength_G: float) -> JointSpectralKernel:
        return replace(self, strength_G=strength_G)

    def with_global_phase(self, phase: float) -> JointSpectralKernel:
        return replace(self, normalized=self.normalized * np.exp(1j * phase))

    def transposed(self) -> JointSpectralKernel:
        """Swap the roles of signal and idler."""
        return replace(
            self,
            signal_grid=self.idler_grid,
            idler_grid=self.signal_grid,
            normalized=self.normalized.T,
        )

    def signal_marginal(self) -> np.ndarray:
        return np.sum(np.abs(self.normalized) ** 2, axis=1) * self.idler_grid.d_omega
