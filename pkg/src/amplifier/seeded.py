"""Seeded (stimulated) propagation through the amplifier in the undepleted-pump limit."""

import logging
import math
from dataclasses import dataclass

import numpy as np

from core.errors import EmptyFieldError
from jsf.kernel import JointSpectralKernel
from schmidt.decomposition import SchmidtDecomposition, decompose
from spectral import FrequencyGrid, SpectralField, require_same_grid

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class SeededOutput:
    signal_out: SpectralField
    idler_out: SpectralField
    power_gain_total: float
    coefficients: np.ndarray


def amplify_seed(dec: SchmidtDecomposition, seed: SpectralField) -> SeededOutput:
    """Amplify a coherent seed mode by mode.

    signal_out = sum_k xi_k cosh(G_k) psi_k + (seed outside the retained span),
    idler_out = sum_k conj(xi_k) sinh(G_k) phi_k, with xi_k = <psi_k, seed>.
    """
    grid = require_same_grid(seed.grid, dec.signal_grid)
    seed_energy = seed.norm_squared()
    if seed_energy == 0.0:
        raise EmptyFieldError("cannot amplify a zero-norm seed")

    d1 = grid.d_omega
    d2 = dec.idler_grid.d_omega
    u = dec.signal_modes
    v = dec.idler_modes
    weighted = seed.amplitudes * math.sqrt(d1)
    xi = u.conj() @ weighted
    gains = dec.gains

    in_span = u.T @ xi
    signal = u.T @ (xi * np.cosh(gains)) + (weighted - in_span)
    idler = v.T @ (xi.conj() * np.sinh(gains))

    signal_out = SpectralField(grid, signal / math.sqrt(d1))
    idler_out = SpectralField(dec.idler_grid, idler / math.sqrt(d2))
    return SeededOutput(
        signal_out=signal_out,
        idler_out=idler_out,
        power_gain_total=signal_out.norm_squared() / seed_energy,
        # xi in the continuum normalization, <psi_k, seed>
        coefficients=xi,
    )


class SeededAmplifier:
    """Black-box amplifier the feedback loop talks to.

    Only ``amplify`` and the grid are meant for the iteration; ``cosh_g1`` exists
    for the literal divide-by-cosh(G_1) attenuation policy.
    """

    def __init__(self, dec: SchmidtDecomposition):
        self._dec = dec
        self.shots = 0

    @classmethod
    def from_kernel(
        cls, kernel: JointSpectralKernel, max_modes: int | None = None
    ) -> "SeededAmplifier":
        return cls(decompose(kernel, max_modes))

    @property
    def signal_grid(self) -> FrequencyGrid:
        return self._dec.signal_grid

    @property
    def decomposition(self) -> SchmidtDecomposition:
        return self._dec

    @property
    def cosh_g1(self) -> float:
        return float(np.cosh(self._dec.gains[0]))

    def amplify(self, seed: SpectralField) -> SeededOutput:
        self.shots += 1
        return amplify_seed(self._dec, seed)
