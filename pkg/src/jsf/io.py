from pathlib import Path

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict

from jsf.islands import kernel_intensity_grid
from jsf.kernel import JointSpectralKernel
from spectral.io import FLOAT_FORMAT, GridModel


class KernelMetadata(BaseModel):
    model_config = ConfigDict(extra="forbid")

    signal_grid: GridModel
    idler_grid: GridModel
    strength_G: float
    discarded_energy: float
    description: str
    island_count: int | None = None


def kernel_metadata(kernel: JointSpectralKernel, island_count: int | None = None) -> KernelMetadata:
    return KernelMetadata(
        signal_grid=GridModel.from_grid(kernel.signal_grid),
        idler_grid=GridModel.from_grid(kernel.idler_grid),
        strength_G=kernel.strength_G,
        discarded_energy=kernel.discarded_energy,
        description=kernel.description,
        island_count=island_count,
    )


def write_kernel(
    kernel: JointSpectralKernel, out_dir: Path, island_count: int | None = None
) -> tuple[Path, Path]:
    """Write F as long-format CSV (i, j, re, im) next to a JSON metadata file."""
    out_dir.mkdir(parents=True, exist_ok=True)
    rows, cols = np.indices(kernel.shape)
    matrix = kernel.matrix
    csv_path = out_dir / "kernel.csv"
    pd.DataFrame(
        {
            "i": rows.ravel(),
            "j": cols.ravel(),
            "re": matrix.real.ravel(),
            "im": matrix.imag.ravel(),
        }
    ).to_csv(csv_path, index=False, float_format=FLOAT_FORMAT)
    meta_path = out_dir / "kernel.json"
    meta_path.write_text(kernel_metadata(kernel, island_count).model_dump_json(indent=2))
    return csv_path, meta_path


def write_intensity_grid(kernel: JointSpectralKernel, path: Path, max_points: int = 128) -> Path:
    omega_s, omega_i, intensity = kernel_intensity_grid(kernel, max_points)
    grid_s, grid_i = np.meshgrid(omega_s, omega_i, indexing="ij")
    pd.DataFrame(
        {
            "omega_signal": grid_s.ravel(),
            "omega_idler": grid_i.ravel(),
            "intensity": intensity.ravel(),
        }
    ).to_csv(path, index=False, float_format=FLOAT_FORMAT)
    return path
