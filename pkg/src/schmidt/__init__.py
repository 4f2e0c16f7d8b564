from schmidt.bogoliubov import BogoliubovKernels, bogoliubov_kernels
from schmidt.decomposition import (
    SchmidtDecomposition,
    decompose,
    gain_of_mode,
    power_gain,
    subspace_overlap,
)

__all__ = [
    "BogoliubovKernels",
    "SchmidtDecomposition",
    "bogoliubov_kernels",
    "decompose",
    "gain_of_mode",
    "power_gain",
    "subspace_overlap",
]
