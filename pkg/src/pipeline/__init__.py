from pipeline.config import list_presets, load_config, load_preset, write_resolved_config
from pipeline.kernels import build_kernel
from pipeline.runner import ExperimentRunner, StageArtifacts

__all__ = [
    "ExperimentRunner",
    "StageArtifacts",
    "build_kernel",
    "list_presets",
    "load_config",
    "load_preset",
    "write_resolved_config",
]
