from spectral.grid import FrequencyGrid, SpectralField, TemporalProfile, require_same_grid
from spectral.ops import (
    ProjectionResult,
    gram_matrix,
    gram_schmidt_project_out,
    inner_product,
    orthonormality_error,
    overlap,
    to_temporal,
)

__all__ = [
    "FrequencyGrid",
    "SpectralField",
    "TemporalProfile",
    "ProjectionResult",
    "gram_matrix",
    "gram_schmidt_project_out",
    "inner_product",
    "orthonormality_error",
    "overlap",
    "require_same_grid",
    "to_temporal",
]
