import json

import numpy as np

from measurement import build_covariance_matrix
from measurement.report import (
    CovarianceReportModel,
    correlation_frame,
    max_off_structure,
    render_table,
    write_report,
)
from schema import MeasurementMethod, Quadrature, QuadratureModel

MODEL = QuadratureModel(gains=[0.9155, 0.6585], efficiency_signal=0.777, efficiency_idler=0.777)


def test_correlation_frame_labels():
    frame = correlation_frame(build_covariance_matrix(MODEL, 2), Quadrature.Y)
    assert list(frame.index) == ["s1", "s2", "i2", "i1"]
    assert list(frame.columns) == list(frame.index)
    assert frame.loc["s1", "i1"] < 0


def test_render_table_analytic():
    text = render_table(build_covariance_matrix(MODEL, 2), Quadrature.X)
    assert text.startswith("C_X (analytic)")
    assert "standard error" not in text
    assert "0.87" in text


def test_render_table_monte_carlo_includes_standard_error():
    report = build_covariance_matrix(
        MODEL, 2, MeasurementMethod.MONTE_CARLO, samples=2_000, rng_seed=1, batches=10
    )
    text = render_table(report, Quadrature.X)
    assert "C_X (monte_carlo)" in text
    assert "standard error, 2000 samples" in text


def test_write_report(tmp_path):
    report = build_covariance_matrix(
        MODEL, 2, MeasurementMethod.MONTE_CARLO, samples=2_000, rng_seed=1, batches=10
    )
    paths = write_report(report, tmp_path / "out", "monte_carlo")
    assert [p.name for p in paths] == ["monte_carlo.json", "monte_carlo.txt"]
    payload = json.loads(paths[0].read_text())
    assert payload["labels"] == ["s1", "s2", "i2", "i1"]
    assert payload["method"] == "monte_carlo"
    loaded = CovarianceReportModel.model_validate(payload)
    np.testing.assert_array_equal(np.array(loaded.c_x), report.c_x)
    np.testing.assert_array_equal(np.array(loaded.se_y), report.se_y)
    text = paths[1].read_text()
    assert "C_X" in text and "C_Y" in text


def test_max_off_structure():
    analytic = build_covariance_matrix(MODEL, 2)
    assert max_off_structure(analytic, Quadrature.X) == 0.0
    sampled = build_covariance_matrix(
        MODEL, 2, MeasurementMethod.MONTE_CARLO, samples=20_000, rng_seed=2, batches=20
    )
    assert 0.0 < max_off_structure(sampled, Quadrature.X) < 0.05
