from measurement.covariance import CovarianceReport, batch_generator, build_covariance_matrix
from measurement.duan import (
    DuanResult,
    duan_criterion,
    duan_from_db,
    efficiency_correct,
    infer_efficiency,
)
from measurement.homodyne import homodyne_variance
from measurement.moments import (
    Moments,
    analytic_moments,
    mode_labels,
    phase_space_covariance,
    symplectic_eigenvalues,
)

__all__ = [
    "CovarianceReport",
    "DuanResult",
    "Moments",
    "analytic_moments",
    "batch_generator",
    "build_covariance_matrix",
    "duan_criterion",
    "duan_from_db",
    "efficiency_correct",
    "homodyne_variance",
    "infer_efficiency",
    "mode_labels",
    "phase_space_covariance",
    "symplectic_eigenvalues",
]
