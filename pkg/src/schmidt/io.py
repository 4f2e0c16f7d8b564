import logging
from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field

from schmidt.decomposition import SchmidtDecomposition
from spectral.io import write_field_csv

logger = logging.getLogger(__name__)


class ModeEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    k: int = Field(ge=1)
    r_k: float
    G_k: float
    power_gain: float


class DecompositionManifest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    G: float
    retained_modes: int
    retained_energy: float
    degenerate_pairs: list[tuple[int, int]]
    modes: list[ModeEntry]

    @classmethod
    def from_decomposition(
        cls, dec: SchmidtDecomposition, limit: int | None = None
    ) -> "DecompositionManifest":
        count = dec.mode_count if limit is None else min(limit, dec.mode_count)
        return cls(
            G=dec.G,
            retained_modes=dec.mode_count,
            retained_energy=dec.retained_energy,
            degenerate_pairs=dec.degenerate_pairs,
            modes=[
                ModeEntry(
                    k=k + 1,
                    r_k=float(dec.r[k]),
                    G_k=float(dec.gains[k]),
                    power_gain=float(dec.power_gains[k]),
                )
                for k in range(count)
            ],
        )


def write_decomposition(
    dec: SchmidtDecomposition, out_dir: Path, limit: int | None = None
) -> list[Path]:
    """psi_k.csv / phi_k.csv per mode plus manifest.json."""
    out_dir.mkdir(parents=True, exist_ok=True)
    manifest = DecompositionManifest.from_decomposition(dec, limit)
    written = []
    for entry in manifest.modes:
        written.append(write_field_csv(dec.mode(entry.k), out_dir / f"psi_{entry.k}.csv"))
        written.append(write_field_csv(dec.idler_mode(entry.k), out_dir / f"phi_{entry.k}.csv"))
    manifest_path = out_dir / "manifest.json"
    manifest_path.write_text(manifest.model_dump_json(indent=2))
    written.append(manifest_path)
    logger.info(f"Wrote {len(manifest.modes)} mode pairs to {out_dir}")
    return written
