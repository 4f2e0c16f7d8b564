"""Parameter models for the physics layers.

Frequencies are dimensionless, in units of the pump bandwidth sigma_p, unless a
field name says otherwise.
"""

import math
from typing import Self

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from schema.models import AttenuationPolicy, Beam, FeedbackMode


class PumpSpec(BaseModel):
    """Spectral envelope and chirp of the pulsed pump."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    center_detuning: float = Field(
        default=0.0,
        description="Offset of the pump-pair center (Omega1 + Omega2) from zero.",
        examples=[0.0],
    )
    bandwidth_sigma_p: float = Field(
        default=1.0,
        gt=0,
        description="Pump bandwidth sigma_p in grid units.",
        examples=[1.0],
    )
    chirp_coefficient: float = Field(
        default=0.0,
        description="c in the pump phase exp(i c Omega^2 / 2 sigma_p^2).",
        examples=[0.0, 1.0],
    )


class NliSpec(BaseModel):
    """Two dispersion-shifted fibers separated by a piece of standard fiber."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    dsf_length_m: float = Field(default=150.0, gt=0, description="Length of each DSF.")
    smf_length_m: float = Field(
        default=3.4, ge=0, description="Length of the SMF between the two DSFs."
    )
    zero_dispersion_nm: float = Field(
        default=1548.5, gt=0, description="Zero-GVD wavelength of the DSF."
    )
    dispersion_slope_ps_nm2_km: float = Field(
        default=0.075, description="GVD slope of the DSF in ps/(nm^2 km)."
    )
    smf_dispersion_ps_nm_km: float = Field(
        default=17.0, description="Dispersion parameter D of the SMF in ps/(nm km)."
    )
    pump_wavelength_nm: float = Field(default=1549.32, gt=0)
    pump_fwhm_nm: float = Field(
        default=0.28, gt=0, description="FWHM of the filtered pump spectrum."
    )

    @field_validator(
        "dispersion_slope_ps_nm2_km", "smf_dispersion_ps_nm_km", mode="after"
    )
    @classmethod
    def _finite(cls, value: float) -> float:
        if not math.isfinite(value):
            raise ValueError("dispersion coefficients must be finite")
        return value


class IterationConfig(BaseModel):
    """Settings of the feedback-iteration loop."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    max_iterations: int = Field(default=50, ge=1)
    convergence_overlap: float | None = Field(
        default=None,
        gt=0,
        lt=1,
        description=(
            "Stop when |<a_N, a_N+1>| exceeds this and the distance to the mode extrapolated "
            "from the step history is below 1 minus this. None picks 1 - 1e-9 for "
            "full_complex and 1 - 1e-6 for intensity_only."
        ),
    )
    feedback_mode: FeedbackMode = FeedbackMode.FULL_COMPLEX
    zero_detection_threshold: float = Field(
        default=1e-3,
        gt=0,
        lt=1,
        description="Spectral zeros are local minima below this fraction of the peak intensity.",
    )
    attenuation_policy: AttenuationPolicy = AttenuationPolicy.NORMALIZE
    degenerate_floor: float = Field(default=1e-6, gt=0, lt=1)
    min_excess_gain: float = Field(
        default=1e-6,
        gt=0,
        description="Power gains within this of unity are indistinguishable from no gain.",
    )
    required_modes: int = Field(
        default=1,
        ge=0,
        description="Leading orders whose non-convergence is a numerical failure.",
    )
    record_iterates: bool = False

    # OSA model used by intensity_only feedback
    noise_floor: float = Field(default=0.0, ge=0)
    detector_tilt: float = Field(
        default=0.0,
        gt=-1,
        lt=1,
        description="Linear detector response 1 + tilt * (omega - center) / half-span.",
    )
    osa_resolution_bins: int = Field(default=1, ge=1)

    cosh_g1: float | None = Field(
        default=None,
        ge=1,
        description="Attenuation factor for divide_by_cosh_G1; read from the amplifier if unset.",
    )

    @property
    def overlap_target(self) -> float:
        if self.convergence_overlap is not None:
            return self.convergence_overlap
        if self.feedback_mode == FeedbackMode.INTENSITY_ONLY:
            return 1.0 - 1e-6
        return 1.0 - 1e-9


class ModeLabel(BaseModel):
    """One temporal mode of one beam, e.g. s1 or i3."""

    model_config = ConfigDict(frozen=True)

    beam: Beam
    order: int = Field(ge=1)

    def __str__(self) -> str:
        return f"{'s' if self.beam == Beam.SIGNAL else 'i'}{self.order}"


def _per_mode(value: float | list[float], count: int, name: str) -> list[float]:
    values = [value] * count if isinstance(value, float | int) else list(value)
    if len(values) != count:
        raise ValueError(f"{name} has {len(values)} entries for {count} modes")
    if any(not 0.0 <= v <= 1.0 for v in values):
        raise ValueError(f"{name} entries must lie in [0, 1], got {values}")
    return [float(v) for v in values]


class QuadratureModel(BaseModel):
    """Per-mode squeezing parameters plus detection losses."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    gains: list[float] = Field(
        description="Per-mode squeezing parameters G_k, ordered by mode.",
        examples=[[0.9155, 0.6585, 0.5235]],
    )
    efficiency_signal: float | list[float] = Field(
        default=1.0, description="Detection efficiency of the signal beam, or one per mode."
    )
    efficiency_idler: float | list[float] = Field(
        default=1.0, description="Detection efficiency of the idler beam, or one per mode."
    )
    lo_overlap_signal: float | list[float] = Field(
        default=1.0, description="Mode-matching efficiency of the signal LO."
    )
    lo_overlap_idler: float | list[float] = Field(
        default=1.0, description="Mode-matching efficiency of the idler LO."
    )

    @field_validator("gains", mode="after")
    @classmethod
    def _gains_valid(cls, gains: list[float]) -> list[float]:
        if not gains:
            raise ValueError("at least one mode gain is required")
        if any(g < 0 or not math.isfinite(g) for g in gains):
            raise ValueError(f"gains must be finite and non-negative, got {gains}")
        return gains

    @model_validator(mode="after")
    def _per_mode_lengths(self) -> Self:
        n = len(self.gains)
        _per_mode(self.efficiency_signal, n, "efficiency_signal")
        _per_mode(self.efficiency_idler, n, "efficiency_idler")
        _per_mode(self.lo_overlap_signal, n, "lo_overlap_signal")
        _per_mode(self.lo_overlap_idler, n, "lo_overlap_idler")
        return self

    @property
    def mode_count(self) -> int:
        return len(self.gains)

    def gain(self, order: int) -> float:
        if not 1 <= order <= self.mode_count:
            raise IndexError(f"mode order {order} outside 1..{self.mode_count}")
        return self.gains[order - 1]

    def efficiency(self, beam: Beam, order: int) -> float:
        value = self.efficiency_signal if beam == Beam.SIGNAL else self.efficiency_idler
        return _per_mode(value, self.mode_count, "efficiency")[order - 1]

    def lo_overlap(self, beam: Beam, order: int) -> float:
        value = self.lo_overlap_signal if beam == Beam.SIGNAL else self.lo_overlap_idler
        return _per_mode(value, self.mode_count, "lo_overlap")[order - 1]
