import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from amplifier import SeededAmplifier, amplify_seed
from core.errors import EmptyFieldError, GridMismatchError
from spectral import FrequencyGrid, SpectralField, overlap


def test_mode_seed_gets_cosh_squared(chirped_dec):
    for k in range(1, 4):
        out = amplify_seed(chirped_dec, chirped_dec.mode(k))
        assert out.power_gain_total == pytest.approx(chirped_dec.power_gains[k - 1])
        assert overlap(out.signal_out, chirped_dec.mode(k)) == pytest.approx(1.0)


def test_coefficients_are_projections(chirped_dec):
    seed = (0.6 * chirped_dec.mode(1) + 0.8j * chirped_dec.mode(3)).normalized()
    out = amplify_seed(chirped_dec, seed)
    np.testing.assert_allclose(out.coefficients[:3], [0.6, 0.0, 0.8j], atol=1e-10)


def test_energy_bookkeeping(chirped_dec):
    grid = chirped_dec.signal_grid
    seed = SpectralField(grid, np.exp(-((grid.omega - 0.3) ** 2) / 3)).normalized()
    out = amplify_seed(chirped_dec, seed)
    # |signal|^2 - |idler|^2 equals the seed energy
    assert out.signal_out.norm_squared() - out.idler_out.norm_squared() == pytest.approx(1.0)
    assert out.power_gain_total > 1


def test_g_zero_is_identity(chirped_kernel):
    amplifier = SeededAmplifier.from_kernel(chirped_kernel.with_strength(0.0))
    grid = amplifier.signal_grid
    seed = SpectralField(grid, np.exp(-(grid.omega**2) / 2)).normalized()
    out = amplifier.amplify(seed)
    np.testing.assert_allclose(out.signal_out.amplitudes, seed.amplitudes, atol=1e-12)
    assert out.idler_out.norm() == pytest.approx(0.0, abs=1e-12)
    assert amplifier.cosh_g1 == 1.0


def test_invalid_seeds(chirped_dec):
    with pytest.raises(EmptyFieldError):
        amplify_seed(chirped_dec, SpectralField.zeros(chirped_dec.signal_grid))
    other = FrequencyGrid(-8.0, 8.0, 100)
    with pytest.raises(GridMismatchError):
        amplify_seed(chirped_dec, SpectralField(other, np.ones(100)))


def test_amplifier_counts_shots(chirped_dec):
    amplifier = SeededAmplifier(chirped_dec)
    amplifier.amplify(chirped_dec.mode(1))
    amplifier.amplify(chirped_dec.mode(2))
    assert amplifier.shots == 2
    assert amplifier.cosh_g1 == pytest.approx(math.cosh(chirped_dec.gains[0]))
    assert amplifier.decomposition is chirped_dec


def random_seed(grid, seed):
    rng = np.random.default_rng(seed)
    values = rng.standard_normal(grid.n_points) + 1j * rng.standard_normal(grid.n_points)
    return SpectralField(grid, values).normalized()


seeds = st.integers(0, 2**31)
coefficients = st.complex_numbers(max_magnitude=2.0, allow_nan=False, allow_infinity=False)


@settings(max_examples=200, deadline=None)
@given(seeds, seeds, coefficients, coefficients)
def test_amplification_is_linear(chirped_dec, first, second, a, b):
    grid = chirped_dec.signal_grid
    s1, s2 = random_seed(grid, first), random_seed(grid, second)
    combined = a * s1 + b * s2
    if combined.norm() < 1e-6:
        return
    out = amplify_seed(chirped_dec, combined)
    out1, out2 = amplify_seed(chirped_dec, s1), amplify_seed(chirped_dec, s2)
    expected_signal = a * out1.signal_out.amplitudes + b * out2.signal_out.amplitudes
    np.testing.assert_allclose(out.signal_out.amplitudes, expected_signal, rtol=0, atol=1e-10)
    # the idler is the conjugate channel
    expected_idler = np.conj(a) * out1.idler_out.amplitudes + np.conj(b) * out2.idler_out.amplitudes
    np.testing.assert_allclose(out.idler_out.amplitudes, expected_idler, rtol=0, atol=1e-10)


@settings(max_examples=300, deadline=None)
@given(seeds, st.floats(0.0, 1.0))
def test_leading_mode_has_the_largest_gain(chirped_dec, seed, leading_share):
    grid = chirped_dec.signal_grid
    mixed = math.sqrt(leading_share) * chirped_dec.mode(1) + random_seed(grid, seed)
    out = amplify_seed(chirped_dec, mixed.normalized())
    assert out.power_gain_total <= chirped_dec.power_gains[0] + 1e-8


@settings(max_examples=300, deadline=None)
@given(seeds)
def test_idler_energy_matches_coefficients(chirped_dec, seed):
    out = amplify_seed(chirped_dec, random_seed(chirped_dec.signal_grid, seed))
    expected = np.sum(np.abs(out.coefficients) ** 2 * np.sinh(chirped_dec.gains) ** 2)
    assert out.idler_out.norm_squared() / expected == pytest.approx(1.0, abs=1e-10)
