import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from measurement import analytic_moments, mode_labels, phase_space_covariance
from measurement.moments import covariance_matrix, normalize_covariance, symplectic_eigenvalues
from schema import Beam, ModeLabel, Quadrature, QuadratureModel

GAINS = [math.acosh(math.sqrt(g)) for g in (2.1, 1.5, 1.3)]


def s(k):
    return ModeLabel(beam=Beam.SIGNAL, order=k)


def i(k):
    return ModeLabel(beam=Beam.IDLER, order=k)


def test_mode_labels_order():
    assert [str(label) for label in mode_labels(3)] == ["s1", "s2", "s3", "i3", "i2", "i1"]


def test_lossless_moments():
    model = QuadratureModel(gains=GAINS)
    moments = analytic_moments(model, s(1), i(1))
    assert moments.var_m == pytest.approx(math.cosh(2 * GAINS[0]))
    assert moments.var_n == pytest.approx(3.2)
    assert moments.covar == pytest.approx(math.sinh(2 * GAINS[0]))
    assert moments.correlation == pytest.approx(math.tanh(2 * GAINS[0]))


def test_lossy_correlation():
    model = QuadratureModel(gains=GAINS, efficiency_signal=0.777, efficiency_idler=0.777)
    moments = analytic_moments(model, s(1), i(1))
    assert moments.var_m == pytest.approx(0.777 * 2.2 + 1)
    assert moments.correlation == pytest.approx(0.8717, abs=1e-4)


def test_phase_quadrature_is_anticorrelated():
    model = QuadratureModel(gains=GAINS, efficiency_signal=0.8, efficiency_idler=0.9)
    x = analytic_moments(model, s(2), i(2), Quadrature.X)
    y = analytic_moments(model, s(2), i(2), Quadrature.Y)
    assert y.covar == pytest.approx(-x.covar)
    assert y.var_m == pytest.approx(x.var_m)


def test_only_partner_modes_correlate():
    model = QuadratureModel(gains=GAINS)
    assert analytic_moments(model, s(1), i(2)).covar == 0.0
    assert analytic_moments(model, s(1), s(2)).covar == 0.0
    assert analytic_moments(model, i(3), i(3)).covar == pytest.approx(1.6)


def test_lo_overlap_scales_covariance_only():
    matched = QuadratureModel(gains=GAINS)
    mismatched = QuadratureModel(gains=GAINS, lo_overlap_signal=0.81, lo_overlap_idler=1.0)
    a = analytic_moments(matched, s(1), i(1))
    b = analytic_moments(mismatched, s(1), i(1))
    assert b.var_m == pytest.approx(a.var_m)
    assert b.covar == pytest.approx(0.9 * a.covar)


def test_moments_outside_model():
    model = QuadratureModel(gains=GAINS[:2])
    with pytest.raises(IndexError):
        analytic_moments(model, s(3), i(3))


def test_covariance_matrix_structure():
    model = QuadratureModel(gains=GAINS, efficiency_signal=0.777, efficiency_idler=0.777)
    c_x = normalize_covariance(covariance_matrix(model, 3, Quadrature.X))
    np.testing.assert_allclose(np.diag(c_x), 1.0)
    anti = np.fliplr(c_x).diagonal()
    np.testing.assert_allclose(anti[:3], anti[3:][::-1])
    assert anti[0] > anti[1] > anti[2] > 0
    mask = ~(np.eye(6, dtype=bool) | np.fliplr(np.eye(6, dtype=bool)))
    assert np.all(c_x[mask] == 0.0)


def test_symplectic_eigenvalues_pure_state():
    model = QuadratureModel(gains=GAINS)
    nu = symplectic_eigenvalues(phase_space_covariance(model, 3))
    assert len(nu) == 6
    np.testing.assert_allclose(nu, 1.0, atol=1e-9)


def test_symplectic_eigenvalues_lossy_state():
    model = QuadratureModel(gains=GAINS, efficiency_signal=0.6, efficiency_idler=0.9)
    nu = symplectic_eigenvalues(phase_space_covariance(model, 3))
    assert np.all(nu >= 1 - 1e-9)
    assert nu.max() > 1.01


efficiencies = st.floats(0.05, 1.0)
lossy_models = st.builds(
    QuadratureModel,
    gains=st.lists(st.floats(0.0, 2.0), min_size=1, max_size=4),
    efficiency_signal=efficiencies,
    efficiency_idler=efficiencies,
    lo_overlap_signal=efficiencies,
    lo_overlap_idler=efficiencies,
)


@settings(max_examples=300, deadline=None)
@given(lossy_models)
def test_randomized_models_respect_uncertainty(model):
    count = model.mode_count
    for label in mode_labels(count):
        x = analytic_moments(model, label, label, Quadrature.X).var_m
        y = analytic_moments(model, label, label, Quadrature.Y).var_m
        assert x * y >= 1 - 1e-10
    c_x = normalize_covariance(covariance_matrix(model, count, Quadrature.X))
    assert np.all(np.abs(c_x) <= 1 + 1e-12)
    nu = symplectic_eigenvalues(phase_space_covariance(model, count))
    assert np.all(nu >= 1 - 1e-8)
