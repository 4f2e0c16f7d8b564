import numpy as np
import pandas as pd
import pytest

from spectral import FrequencyGrid, SpectralField, to_temporal
from spectral.io import (
    FieldEnvelope,
    read_field_csv,
    read_field_json,
    write_field_csv,
    write_field_json,
    write_temporal_csv,
)

GRID = FrequencyGrid(-8.0, 8.0, 128)


@pytest.fixture
def chirped_field():
    omega = GRID.omega
    return SpectralField(GRID, np.exp(-(omega**2) / 4 + 0.37j * omega**2)).normalized()


def test_csv_round_trip_is_exact(tmp_path, chirped_field):
    path = write_field_csv(chirped_field, tmp_path / "field.csv")
    restored = read_field_csv(path)
    assert restored.grid == GRID
    np.testing.assert_array_equal(restored.amplitudes, chirped_field.amplitudes)


def test_json_round_trip_keeps_label(tmp_path, chirped_field):
    path = write_field_json(chirped_field, tmp_path / "field.json", label="psi_1")
    restored = read_field_json(path)
    np.testing.assert_array_equal(restored.amplitudes, chirped_field.amplitudes)
    assert FieldEnvelope.model_validate_json(path.read_text()).label == "psi_1"


def test_csv_missing_columns(tmp_path):
    path = tmp_path / "bad.csv"
    pd.DataFrame({"omega": [0.0, 1.0], "re": [1.0, 0.0]}).to_csv(path, index=False)
    with pytest.raises(ValueError, match="missing columns"):
        read_field_csv(path)


def test_csv_nonuniform_grid(tmp_path):
    path = tmp_path / "bad.csv"
    pd.DataFrame({"omega": [0.0, 1.0, 3.0], "re": [1.0, 0.0, 0.0], "im": [0.0] * 3}).to_csv(
        path, index=False
    )
    with pytest.raises(ValueError, match="uniform"):
        read_field_csv(path)


def test_temporal_csv_columns(tmp_path, chirped_field):
    path = write_temporal_csv(to_temporal(chirped_field), tmp_path / "temporal.csv")
    frame = pd.read_csv(path)
    assert list(frame.columns) == ["tau", "re", "im"]
    assert len(frame) == GRID.n_points
