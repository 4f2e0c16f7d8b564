import json

import numpy as np

from jsf.io import write_intensity_grid, write_kernel
from schmidt.io import DecompositionManifest, write_decomposition
from spectral.io import read_field_csv


def test_write_decomposition(tmp_path, chirped_dec):
    paths = write_decomposition(chirped_dec, tmp_path, limit=3)
    names = sorted(p.name for p in paths)
    assert names == [
        "manifest.json",
        "phi_1.csv",
        "phi_2.csv",
        "phi_3.csv",
        "psi_1.csv",
        "psi_2.csv",
        "psi_3.csv",
    ]
    psi_2 = read_field_csv(tmp_path / "psi_2.csv")
    np.testing.assert_array_equal(psi_2.amplitudes, chirped_dec.mode(2).amplitudes)
    manifest = DecompositionManifest.model_validate_json((tmp_path / "manifest.json").read_text())
    assert manifest.retained_modes == chirped_dec.mode_count
    assert [m.k for m in manifest.modes] == [1, 2, 3]
    assert manifest.modes[0].r_k == chirped_dec.r[0]


def test_write_kernel(tmp_path, chirped_kernel):
    csv_path, meta_path = write_kernel(chirped_kernel, tmp_path, island_count=1)
    meta = json.loads(meta_path.read_text())
    assert meta["island_count"] == 1
    lines = csv_path.read_text().splitlines()
    assert lines[0] == "i,j,re,im"
    assert len(lines) == 1 + 256 * 256
    grid_path = write_intensity_grid(chirped_kernel, tmp_path / "intensity.csv")
    assert grid_path.read_text().splitlines()[0] == "omega_signal,omega_idler,intensity"
