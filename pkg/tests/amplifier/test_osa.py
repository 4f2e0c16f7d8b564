import numpy as np
import pytest

from amplifier import linear_response, measure_spectrum
from spectral import FrequencyGrid, SpectralField

GRID = FrequencyGrid(-4.0, 4.0, 81)


@pytest.fixture
def field():
    return SpectralField(GRID, np.exp(-(GRID.omega**2) / 2) * np.exp(1j * GRID.omega))


def test_spectrum_discards_phase(field):
    np.testing.assert_allclose(measure_spectrum(field), np.abs(field.amplitudes) ** 2)


def test_noise_floor_added(field):
    np.testing.assert_allclose(measure_spectrum(field, noise_floor=1e-3) - field.intensity(), 1e-3)
    with pytest.raises(ValueError, match="non-negative"):
        measure_spectrum(field, noise_floor=-1.0)


def test_linear_response(field):
    response = linear_response(GRID, 0.2)
    assert response[0] == pytest.approx(0.8)
    assert response[-1] == pytest.approx(1.2)
    assert response[40] == pytest.approx(1.0)
    np.testing.assert_allclose(
        measure_spectrum(field, response=response), field.intensity() * response
    )
    with pytest.raises(ValueError, match="tilt"):
        linear_response(GRID, 1.0)


def test_response_shape_checked(field):
    with pytest.raises(ValueError, match="shape"):
        measure_spectrum(field, response=np.ones(3))


def test_resolution_smooths_and_keeps_total(field):
    sharp = measure_spectrum(field)
    blurred = measure_spectrum(field, resolution_bins=5)
    assert blurred.max() < sharp.max()
    assert blurred.sum() == pytest.approx(sharp.sum(), rel=1e-6)
