import logging
import math

from jsf import (
    JointSpectralKernel,
    build_gaussian_jsf,
    build_nli_jsf,
    count_islands,
    restrict_to_island,
    separable_angle,
)
from schema import GaussianKernelSpec, GridSpec, NliKernelSpec
from spectral import FrequencyGrid

logger = logging.getLogger(__name__)


def to_grid(spec: GridSpec) -> FrequencyGrid:
    return FrequencyGrid(spec.omega_min, spec.omega_max, spec.n_points)


def correlation_angle(spec: GaussianKernelSpec) -> float:
    if spec.correlation_angle_deg == "separable":
        return separable_angle(spec.pump, spec.sigma_m)
    return math.radians(spec.correlation_angle_deg)


def build_kernel(
    spec: GaussianKernelSpec | NliKernelSpec, G: float | None = None
) -> JointSpectralKernel:
    """Kernel of a config at strength G (its own G when None)."""
    strength = spec.G if G is None else G
    signal_grid, idler_grid = to_grid(spec.signal_grid), to_grid(spec.idler_grid)
    if isinstance(spec, GaussianKernelSpec):
        return build_gaussian_jsf(
            spec.pump, correlation_angle(spec), strength, signal_grid, idler_grid, spec.sigma_m
        )
    kernel = build_nli_jsf(spec.pump, spec.nli, strength, signal_grid, idler_grid)
    if spec.cwdm is not None:
        logger.info(f"Full NLI kernel has {count_islands(kernel)} islands")
        kernel = restrict_to_island(kernel, spec.cwdm.signal, spec.cwdm.idler)
    return kernel


def build_unfiltered_kernel(spec: NliKernelSpec) -> JointSpectralKernel:
    return build_nli_jsf(
        spec.pump, spec.nli, spec.G, to_grid(spec.signal_grid), to_grid(spec.idler_grid)
    )
