import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy import linalg

from core import settings
from jsf.kernel import JointSpectralKernel
from spectral import FrequencyGrid, SpectralField

logger = logging.getLogger(__name__)

# magnitudes this close to the peak count as tied for the phase pin
PIVOT_RTOL = 1e-9


@dataclass(frozen=True, eq=False)
class SchmidtDecomposition:
    """Retained Schmidt modes of a kernel: F = G sum_k r_k psi_k(omega1) phi_k(omega2).

    ``spectrum`` keeps every singular value of the normalized kernel; ``r`` only
    the retained ones. Mode indices are 1-based in the public helpers.
    """

    r: np.ndarray
    psi: list[SpectralField]
    phi: list[SpectralField]
    G: float
    spectrum: np.ndarray
    degenerate_pairs: list[tuple[int, int]]

    @property
    def mode_count(self) -> int:
        return len(self.r)

    @property
    def signal_grid(self) -> FrequencyGrid:
        return self.psi[0].grid

    @property
    def idler_grid(self) -> FrequencyGrid:
        return self.phi[0].grid

    @property
    def gains(self) -> np.ndarray:
        """Per-mode squeezing parameters G_k = r_k G."""
        return self.r * self.G

    @property
    def power_gains(self) -> np.ndarray:
        return np.cosh(self.gains) ** 2

    @property
    def retained_energy(self) -> float:
        return float(np.sum(self.r**2))

    @cached_property
    def signal_modes(self) -> np.ndarray:
        """Rows are psi_k scaled by sqrt(d_omega1), an orthonormal set in plain l2."""
        return np.stack([p.amplitudes for p in self.psi]) * math.sqrt(self.signal_grid.d_omega)

    @cached_property
    def idler_modes(self) -> np.ndarray:
        return np.stack([p.amplitudes for p in self.phi]) * math.sqrt(self.idler_grid.d_omega)

    def reconstruct(self) -> np.ndarray:
        """G sum_k r_k psi_k phi_k^T over the retained modes."""
        psi = np.stack([p.amplitudes for p in self.psi])
        phi = np.stack([p.amplitudes for p in self.phi])
        return self.G * (psi.T * self.r) @ phi

    def reconstruction_error(self, kernel: JointSpectralKernel) -> float:
        """|F - F_retained| / |F| with the normalized kernel standing in for G = 0."""
        psi = np.stack([p.amplitudes for p in self.psi])
        phi = np.stack([p.amplitudes for p in self.phi])
        approx = (psi.T * self.r) @ phi
        return float(np.linalg.norm(kernel.normalized - approx) / np.linalg.norm(kernel.normalized))

    def subspace_projector(self, orders: Sequence[int]) -> np.ndarray:
        """Matrix P with (P a)_j = sum_{k in orders} psi_k(omega_j) <psi_k, a>."""
        d_omega = self.signal_grid.d_omega
        modes = np.stack([self.mode(k).amplitudes for k in orders])
        return modes.T @ modes.conj() * d_omega

    def mode(self, k: int) -> SpectralField:
        _check_order(self, k)
        return self.psi[k - 1]

    def idler_mode(self, k: int) -> SpectralField:
        _check_order(self, k)
        return self.phi[k - 1]

    def is_degenerate(self, k: int) -> bool:
        return any(k in pair for pair in self.degenerate_pairs)


def _check_order(dec: SchmidtDecomposition, k: int) -> None:
    if not 1 <= k <= dec.mode_count:
        raise IndexError(f"mode order {k} outside 1..{dec.mode_count}")


def pivot_index(values: np.ndarray, rtol: float = PIVOT_RTOL) -> int:
    """First sample whose magnitude is within rtol of the largest.

    Odd modes of symmetric kernels have two mirrored peaks of equal height.
    """
    magnitude = np.abs(values)
    return int(np.argmax(magnitude >= magnitude.max() * (1.0 - rtol)))


def retained_mode_count(spectrum: np.ndarray, max_modes: int, tolerance: float) -> int:
    """Smallest K with sum_{k<=K} r_k^2 > 1 - tolerance, capped by max_modes."""
    cumulative = np.cumsum(spectrum**2)
    reached = np.nonzero(cumulative > 1.0 - tolerance)[0]
    count = int(reached[0]) + 1 if reached.size else len(spectrum)
    return max(1, min(count, max_modes))


def decompose(kernel: JointSpectralKernel, max_modes: int | None = None) -> SchmidtDecomposition:
    """Schmidt modes of ``kernel`` by SVD of the d_omega-weighted kernel matrix.

    Each psi_k is rotated so its largest-magnitude sample (the first one on ties
    within PIVOT_RTOL) is real and positive; phi_k takes the conjugate rotation so
    the product psi_k phi_k is unchanged.
    """
    n_s, n_i = kernel.shape
    limit = min(n_s, n_i)
    max_modes = limit if max_modes is None else max_modes
    if not 1 <= max_modes <= limit:
        raise ValueError(f"max_modes must lie in 1..{limit}, got {max_modes}")
    if not np.all(np.isfinite(kernel.normalized)):
        raise ValueError("kernel has non-finite entries")

    d1 = kernel.signal_grid.d_omega
    d2 = kernel.idler_grid.d_omega
    u, s, vh = linalg.svd(kernel.normalized * math.sqrt(d1 * d2), full_matrices=False)

    count = retained_mode_count(s, max_modes, settings.RETAINED_ENERGY_TOLERANCE)
    psi: list[SpectralField] = []
    phi: list[SpectralField] = []
    for k in range(count):
        left = u[:, k] / math.sqrt(d1)
        right = vh[k, :] / math.sqrt(d2)
        index = pivot_index(left)
        rotation = np.conj(left[index]) / abs(left[index])
        pinned = left * rotation
        pinned[index] = abs(pinned[index])
        psi.append(SpectralField(kernel.signal_grid, pinned))
        phi.append(SpectralField(kernel.idler_grid, right * np.conj(rotation)))

    r = np.array(s[:count])
    gap = settings.DEGENERATE_SINGULAR_GAP
    pairs = [(k + 1, k + 2) for k in range(count - 1) if abs(s[k] - s[k + 1]) < gap]
    if pairs:
        logger.warning(f"Degenerate Schmidt subspaces at orders {pairs}")

    logger.info(
        f"Decomposed {kernel.description or 'kernel'}: K={count}, "
        f"r[:3]={np.round(r[:3], 6).tolist()}, retained energy {np.sum(r**2):.9f}"
    )
    return SchmidtDecomposition(
        r=r,
        psi=psi,
        phi=phi,
        G=kernel.strength_G,
        spectrum=s,
        degenerate_pairs=pairs,
    )


def gain_of_mode(dec: SchmidtDecomposition, k: int) -> float:
    """G_k = r_k G for 1-based order k."""
    _check_order(dec, k)
    return float(dec.r[k - 1] * dec.G)


def power_gain(dec: SchmidtDecomposition, k: int) -> float:
    """cosh^2(G_k), the energy gain of a seeded mode k."""
    return float(math.cosh(gain_of_mode(dec, k)) ** 2)


def subspace_overlap(
    dec: SchmidtDecomposition, orders: Sequence[int], fields: Sequence[SpectralField]
) -> float:
    """Smallest fraction of a normalized field's energy inside span{psi_k : k in orders}.

    Compares extracted modes against a degenerate oracle subspace where
    individual vectors are not defined.
    """
    projector = dec.subspace_projector(orders)
    worst = 1.0
    for f in fields:
        unit = f.normalized()
        projected = SpectralField(unit.grid, projector @ unit.amplitudes)
        worst = min(worst, projected.norm_squared())
    return worst
