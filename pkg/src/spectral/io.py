"""CSV and JSON serialization of spectral fields and temporal profiles."""

from pathlib import Path

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict, Field

from spectral.grid import FrequencyGrid, SpectralField, TemporalProfile

# 17 significant digits reproduce any float64 exactly
FLOAT_FORMAT = "%.17g"


class GridModel(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    omega_min: float
    omega_max: float
    n_points: int = Field(ge=2)

    @classmethod
    def from_grid(cls, grid: FrequencyGrid) -> "GridModel":
        return cls(omega_min=grid.omega_min, omega_max=grid.omega_max, n_points=grid.n_points)

    def to_grid(self) -> FrequencyGrid:
        return FrequencyGrid(self.omega_min, self.omega_max, self.n_points)


class FieldEnvelope(BaseModel):
    """JSON envelope of a SpectralField: grid metadata plus split real/imaginary parts."""

    model_config = ConfigDict(extra="forbid")

    grid: GridModel
    re: list[float]
    im: list[float]
    label: str | None = None

    @classmethod
    def from_field(cls, field: SpectralField, label: str | None = None) -> "FieldEnvelope":
        return cls(
            grid=GridModel.from_grid(field.grid),
            re=field.amplitudes.real.tolist(),
            im=field.amplitudes.imag.tolist(),
            label=label,
        )

    def to_field(self) -> SpectralField:
        return SpectralField(self.grid.to_grid(), np.asarray(self.re) + 1j * np.asarray(self.im))


def field_to_frame(field: SpectralField) -> pd.DataFrame:
    return pd.DataFrame(
        {
            "omega": field.grid.omega,
            "re": field.amplitudes.real,
            "im": field.amplitudes.imag,
        }
    )


def write_field_csv(field: SpectralField, path: Path) -> Path:
    field_to_frame(field).to_csv(path, index=False, float_format=FLOAT_FORMAT)
    return path


def read_field_csv(path: Path) -> SpectralField:
    frame = pd.read_csv(path, float_precision="round_trip")
    missing = {"omega", "re", "im"} - set(frame.columns)
    if missing:
        raise ValueError(f"{path}: missing columns {sorted(missing)}")
    omega = frame["omega"].to_numpy()
    grid = FrequencyGrid(float(omega[0]), float(omega[-1]), len(omega))
    if not np.allclose(omega, grid.omega, rtol=0.0, atol=1e-9 * max(1.0, grid.span)):
        raise ValueError(f"{path}: omega column is not a uniform grid")
    return SpectralField(grid, frame["re"].to_numpy() + 1j * frame["im"].to_numpy())


def write_field_json(field: SpectralField, path: Path, label: str | None = None) -> Path:
    path.write_text(FieldEnvelope.from_field(field, label).model_dump_json(indent=2))
    return path


def read_field_json(path: Path) -> SpectralField:
    return FieldEnvelope.model_validate_json(path.read_text()).to_field()


def write_temporal_csv(profile: TemporalProfile, path: Path) -> Path:
    pd.DataFrame(
        {"tau": profile.times, "re": profile.values.real, "im": profile.values.imag}
    ).to_csv(path, index=False, float_format=FLOAT_FORMAT)
    return path
