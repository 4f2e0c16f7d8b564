import math
from typing import Annotated, Literal, Self

from pydantic import BaseModel, ConfigDict, Field, model_validator

from schema.specs import IterationConfig, NliSpec, PumpSpec

SCHEMA_VERSION = "tmode-iteration/1"


class GridSpec(BaseModel):
    """Uniform frequency axis in units of sigma_p."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    omega_min: float = Field(default=-8.0, examples=[-8.0])
    omega_max: float = Field(default=8.0, examples=[8.0])
    n_points: int = Field(default=256, ge=2, examples=[256])

    @model_validator(mode="after")
    def _ordered(self) -> Self:
        if not self.omega_max > self.omega_min:
            raise ValueError(
                f"omega_max ({self.omega_max}) must exceed omega_min ({self.omega_min})"
            )
        return self


class BandSpec(BaseModel):
    """CWDM pass bands, one per beam."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    signal: tuple[float, float] = Field(description="Signal pass band (low, high).")
    idler: tuple[float, float] = Field(description="Idler pass band (low, high).")


class GaussianKernelSpec(BaseModel):
    """Double-Gaussian JSF with a possibly chirped pump."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    model: Literal["gaussian"] = "gaussian"
    pump: PumpSpec = PumpSpec()
    sigma_m: float = Field(default=1.0, gt=0, description="Phase-matching width.")
    correlation_angle_deg: float | Literal["separable"] = Field(
        default=45.0,
        description="Correlation angle in degrees, or 'separable' for the rank-1 angle.",
        examples=[45.0, "separable"],
    )
    G: float = Field(default=2.5, ge=0, description="Kernel strength.")
    signal_grid: GridSpec = GridSpec()
    idler_grid: GridSpec = GridSpec()


class NliKernelSpec(BaseModel):
    """Fiber nonlinear interferometer JSF, optionally cut down by CWDM filters."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    model: Literal["nli"] = "nli"
    pump: PumpSpec = PumpSpec()
    nli: NliSpec = NliSpec()
    G: float = Field(default=1.0, ge=0)
    signal_grid: GridSpec = GridSpec(omega_min=-230.0, omega_max=-90.0, n_points=256)
    idler_grid: GridSpec = GridSpec(omega_min=90.0, omega_max=230.0, n_points=256)
    cwdm: BandSpec | None = None


KernelSpec = Annotated[GaussianKernelSpec | NliKernelSpec, Field(discriminator="model")]


class MeasurementConfig(BaseModel):
    """Quadrature-measurement stage: gains, losses, sampling."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    power_gains: list[float] | None = Field(
        default=None,
        description="Measured power gains per mode; taken from the oracle when unset.",
        examples=[[2.1, 1.5, 1.3]],
    )
    efficiency_signal: float | list[float] = Field(default=1.0)
    efficiency_idler: float | list[float] = Field(default=1.0)
    lo_overlap_signal: float | list[float] = Field(default=1.0)
    lo_overlap_idler: float | list[float] = Field(default=1.0)
    samples: int = Field(
        default=0,
        ge=0,
        description="Monte Carlo shots per quadrature; 0 keeps the analytic report only.",
        examples=[300000],
    )
    batches: int = Field(default=50, ge=2)
    rng_seed: int | None = Field(default=None, ge=0)
    measured_db: list[float] | None = Field(
        default=None,
        description="Measured I/I_u values in dB to run through the efficiency correction.",
        examples=[[-2.56, -1.5, -1.2]],
    )
    correction_efficiency: float | None = Field(default=None, gt=0, le=1)

    @model_validator(mode="after")
    def _valid(self) -> Self:
        if self.samples and self.samples < 100:
            raise ValueError(f"Monte Carlo needs at least 100 samples, got {self.samples}")
        if self.power_gains is not None and any(
            g < 1 or not math.isfinite(g) for g in self.power_gains
        ):
            raise ValueError(f"power gains must be finite and >= 1, got {self.power_gains}")
        return self


def sweep_label(G: float) -> str:
    """Name of the output folder of one sweep point."""
    return f"G_{G:.6g}"


class ExperimentConfig(BaseModel):
    """One experiment: kernel, optional G sweep, iteration and measurement settings."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    name: str = Field(default="experiment", examples=["chirped_gaussian"])
    kernel: KernelSpec = Field(default_factory=GaussianKernelSpec)
    g_sweep: list[float] | None = Field(
        default=None,
        description="Kernel strengths to sweep instead of the kernel's own G.",
        examples=[[1.0, 1.5, 2.0, 2.5, 3.0]],
    )
    mode_count: int = Field(default=3, ge=1, description="Number of modes K to extract.")
    max_modes: int | None = Field(default=None, ge=1, description="Cap on retained Schmidt modes.")
    iteration: IterationConfig = IterationConfig()
    seed_field: str | None = Field(
        default=None,
        description="CSV (omega, re, im) of the injected seed; a broadband Gaussian when unset.",
    )
    measurement: MeasurementConfig = MeasurementConfig()
    output_dir: str | None = None
    rng_seed: int | None = Field(default=None, ge=0)

    @model_validator(mode="after")
    def _sweep_valid(self) -> Self:
        if self.g_sweep is not None and (
            not self.g_sweep or any(g < 0 or not math.isfinite(g) for g in self.g_sweep)
        ):
            raise ValueError(f"g_sweep must be a non-empty list of G >= 0, got {self.g_sweep}")
        if self.g_sweep is not None:
            labels = [sweep_label(g) for g in self.g_sweep]
            repeated = sorted({label for label in labels if labels.count(label) > 1})
            if repeated:
                raise ValueError(f"g_sweep repeats the strengths {repeated}")
        return self

    @model_validator(mode="after")
    def _max_modes_fit_grid(self) -> Self:
        limit = min(self.kernel.signal_grid.n_points, self.kernel.idler_grid.n_points)
        if self.max_modes is not None and self.max_modes > limit:
            raise ValueError(f"max_modes={self.max_modes} exceeds the grid limit of {limit} modes")
        return self

    @property
    def strengths(self) -> list[float]:
        return list(self.g_sweep) if self.g_sweep else [self.kernel.G]
