from jsf.gaussian import build_gaussian_jsf, separable_angle
from jsf.islands import count_islands, island_labels, kernel_intensity_grid, restrict_to_island
from jsf.kernel import JointSpectralKernel
from jsf.nli import build_nli_jsf, build_single_dsf_jsf, interference_factor, interference_zeros

__all__ = [
    "JointSpectralKernel",
    "build_gaussian_jsf",
    "build_nli_jsf",
    "build_single_dsf_jsf",
    "count_islands",
    "interference_factor",
    "interference_zeros",
    "island_labels",
    "kernel_intensity_grid",
    "restrict_to_island",
    "separable_angle",
]
