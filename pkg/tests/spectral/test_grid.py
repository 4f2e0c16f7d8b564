import math

import numpy as np
import pytest

from core.errors import EmptyFieldError, GridMismatchError
from spectral import FrequencyGrid, SpectralField, require_same_grid


def gaussian(grid, center=0.0, width=1.0):
    return SpectralField(grid, np.exp(-((grid.omega - center) ** 2) / (4 * width**2)))


def test_grid_spacing_and_axis():
    grid = FrequencyGrid(-8.0, 8.0, 257)
    assert grid.d_omega == pytest.approx(1 / 16)
    assert grid.span == 16.0
    assert grid.center == 0.0
    assert grid.omega[0] == -8.0 and grid.omega[-1] == 8.0
    assert FrequencyGrid.symmetric(8.0, 257) == grid


@pytest.mark.parametrize(
    "args", [(0.0, 1.0, 1), (1.0, 1.0, 10), (2.0, 1.0, 10), (0.0, math.inf, 4)]
)
def test_grid_rejects_invalid(args):
    with pytest.raises(ValueError):
        FrequencyGrid(*args)


def test_index_range_inclusive():
    grid = FrequencyGrid(0.0, 10.0, 11)
    window = grid.index_range(2.0, 5.0)
    np.testing.assert_array_equal(grid.omega[window], [2.0, 3.0, 4.0, 5.0])
    empty = grid.index_range(20.0, 30.0)
    assert empty.start == empty.stop


def test_require_same_grid():
    a = FrequencyGrid(-1.0, 1.0, 8)
    assert require_same_grid(a, FrequencyGrid(-1.0, 1.0, 8)) == a
    with pytest.raises(GridMismatchError):
        require_same_grid(a, FrequencyGrid(-1.0, 1.0, 9))


def test_field_is_read_only(wide_grid):
    field = gaussian(wide_grid)
    with pytest.raises(ValueError):
        field.amplitudes[0] = 1.0


def test_field_shape_checked(wide_grid):
    with pytest.raises(ValueError, match="amplitudes"):
        SpectralField(wide_grid, np.ones(3))


def test_normalization(wide_grid):
    field = gaussian(wide_grid) * 3.0
    unit = field.normalized()
    assert unit.is_normalized()
    assert unit.norm() == pytest.approx(1.0)
    # continuum norm of exp(-w^2/4) is sqrt(2 pi)
    assert gaussian(wide_grid).norm_squared() == pytest.approx(math.sqrt(2 * math.pi), rel=1e-9)


def test_zero_field_cannot_be_normalized(wide_grid):
    with pytest.raises(EmptyFieldError):
        SpectralField.zeros(wide_grid).normalized()


def test_arithmetic(wide_grid):
    a = gaussian(wide_grid, -1.0)
    b = gaussian(wide_grid, 1.0)
    np.testing.assert_allclose((a + b - b).amplitudes, a.amplitudes)
    np.testing.assert_allclose((2 * a).amplitudes, (a * 2).amplitudes)
    np.testing.assert_allclose((a / 2).amplitudes, 0.5 * a.amplitudes)
    np.testing.assert_allclose((-a).amplitudes, -a.amplitudes)
    with pytest.raises(GridMismatchError):
        a + gaussian(FrequencyGrid(-8.0, 8.0, 128))


def test_with_phase_keeps_intensity(wide_grid):
    field = gaussian(wide_grid)
    rotated = field.with_phase(1.3)
    np.testing.assert_allclose(rotated.intensity(), field.intensity())
    assert rotated.amplitudes[128] == pytest.approx(field.amplitudes[128] * np.exp(1.3j))
