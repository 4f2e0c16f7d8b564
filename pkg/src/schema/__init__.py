from schema.models import (
    AttenuationPolicy,
    Beam,
    FeedbackMode,
    MeasurementMethod,
    Quadrature,
    Stage,
)
from schema.schema import (
    SCHEMA_VERSION,
    BandSpec,
    ExperimentConfig,
    GaussianKernelSpec,
    GridSpec,
    MeasurementConfig,
    NliKernelSpec,
    sweep_label,
)
from schema.specs import IterationConfig, ModeLabel, NliSpec, PumpSpec, QuadratureModel

__all__ = [
    "SCHEMA_VERSION",
    "AttenuationPolicy",
    "BandSpec",
    "Beam",
    "ExperimentConfig",
    "FeedbackMode",
    "GaussianKernelSpec",
    "GridSpec",
    "IterationConfig",
    "MeasurementConfig",
    "MeasurementMethod",
    "ModeLabel",
    "NliKernelSpec",
    "NliSpec",
    "PumpSpec",
    "Quadrature",
    "QuadratureModel",
    "Stage",
    "sweep_label",
]
