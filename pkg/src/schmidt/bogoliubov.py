import math
from dataclasses import dataclass

import numpy as np

from schmidt.decomposition import SchmidtDecomposition
from spectral import SpectralField, require_same_grid


@dataclass(frozen=True, eq=False)
class BogoliubovKernels:
    """C = sum_k cosh(G_k) psi_k psi_k^dagger and S = sum_k sinh(G_k) psi_k phi_k^T.

    Matrices act on sqrt(d_omega)-weighted amplitudes, where the continuum
    inner product becomes the plain l2 one.
    """

    dec: SchmidtDecomposition
    c_matrix: np.ndarray
    s_matrix: np.ndarray
    projector: np.ndarray

    def symplectic_residual(self) -> float:
        """max |C C^dagger - S S^dagger - P| over the retained span."""
        identity = self.c_matrix @ self.c_matrix.conj().T - self.s_matrix @ self.s_matrix.conj().T
        return float(np.max(np.abs(identity - self.projector)))

    def apply_signal(self, seed: SpectralField) -> SpectralField:
        """C a plus the out-of-span part of a, which passes with unit gain."""
        grid = require_same_grid(seed.grid, self.dec.signal_grid)
        weighted = seed.amplitudes * math.sqrt(grid.d_omega)
        out = self.c_matrix @ weighted + (weighted - self.projector @ weighted)
        return SpectralField(grid, out / math.sqrt(grid.d_omega))

    def apply_idler(self, seed: SpectralField) -> SpectralField:
        """S^T conj(a), the conjugate channel on the idler grid."""
        grid = require_same_grid(seed.grid, self.dec.signal_grid)
        weighted = seed.amplitudes * math.sqrt(grid.d_omega)
        out = self.s_matrix.T @ weighted.conj()
        return SpectralField(self.dec.idler_grid, out / math.sqrt(self.dec.idler_grid.d_omega))


def bogoliubov_kernels(dec: SchmidtDecomposition) -> BogoliubovKernels:
    u = dec.signal_modes
    v = dec.idler_modes
    gains = dec.gains
    c_matrix = (u.T * np.cosh(gains)) @ u.conj()
    s_matrix = (u.T * np.sinh(gains)) @ v
    projector = u.T @ u.conj()
    return BogoliubovKernels(dec, c_matrix, s_matrix, projector)
