import math

import numpy as np
import pytest

from measurement import duan_criterion, duan_from_db, efficiency_correct, infer_efficiency
from measurement.duan import SEPARABLE_BOUND, duan_frame, efficiency_table, from_db, to_db
from schema import QuadratureModel

GAINS = [math.acosh(math.sqrt(g)) for g in (2.1, 1.5, 1.3)]


def test_lossless_two_mode_squeezed_value():
    result = duan_criterion(QuadratureModel(gains=GAINS), 1)
    assert result.k == 1
    assert result.value == pytest.approx(2 * math.exp(-2 * GAINS[0]), rel=1e-9)
    assert result.value == pytest.approx(0.3205, abs=2e-4)
    assert result.ratio_db == pytest.approx(to_db(result.value / SEPARABLE_BOUND))


def test_vacuum_sits_on_the_bound():
    result = duan_criterion(QuadratureModel(gains=[0.0]), 1)
    assert result.value == pytest.approx(SEPARABLE_BOUND)
    assert result.ratio_db == pytest.approx(0.0, abs=1e-12)


def test_loss_raises_the_criterion():
    lossy = QuadratureModel(gains=GAINS, efficiency_signal=0.777, efficiency_idler=0.777)
    lossless = QuadratureModel(gains=GAINS)
    for k in (1, 2, 3):
        assert duan_criterion(lossless, k).value < duan_criterion(lossy, k).value < SEPARABLE_BOUND


@pytest.mark.parametrize(
    "value_db,expected", [(-3.70, 0.853), (-2.00, 1.262), (-1.60, 1.384), (0.0, 2.0)]
)
def test_duan_from_db(value_db, expected):
    assert duan_from_db(value_db) == pytest.approx(expected, abs=1e-3)


def test_db_conversions_invert():
    assert from_db(to_db(0.37)) == pytest.approx(0.37)
    assert to_db(10.0) == pytest.approx(10.0)


def test_infer_efficiency():
    assert infer_efficiency(-2.56, -3.70) == pytest.approx(0.7767, abs=1e-4)
    exact = (1 - 10**-0.256) / (1 - 10**-0.370)
    assert infer_efficiency(-2.56, -3.70) == pytest.approx(exact, rel=1e-12)


def test_efficiency_correct():
    eta = infer_efficiency(-2.56, -3.70)
    assert efficiency_correct(-2.56, eta) == pytest.approx(-3.70, abs=1e-9)
    assert efficiency_correct(-1.50, eta) == pytest.approx(-2.049, abs=0.003)
    assert efficiency_correct(-1.50, 1.0) == pytest.approx(-1.50)


def test_efficiency_correct_rejects_unphysical():
    with pytest.raises(ValueError, match="must lie in"):
        efficiency_correct(-1.0, 0.0)
    with pytest.raises(ValueError, match="too low"):
        efficiency_correct(-5.0, 0.5)


def test_infer_efficiency_rejects_unphysical():
    with pytest.raises(ValueError, match="0 dB"):
        infer_efficiency(-1.0, 0.0)
    with pytest.raises(ValueError, match="unphysical"):
        infer_efficiency(-1.0, -0.5)


def test_duan_frame_correction_recovers_lossless_values():
    lossless = duan_frame(QuadratureModel(gains=GAINS), 3)
    lossy = duan_frame(
        QuadratureModel(gains=GAINS, efficiency_signal=0.777, efficiency_idler=0.777), 3
    )
    assert list(lossy.columns) == ["k", "I_k", "dB", "corrected_dB"]
    assert lossy["k"].tolist() == [1, 2, 3]
    np.testing.assert_allclose(lossless["corrected_dB"], lossless["dB"])
    np.testing.assert_allclose(lossy["corrected_dB"], lossless["dB"], atol=1e-9)
    assert (lossy["dB"] > lossless["dB"]).all()


def test_duan_frame_zero_efficiency_is_nan():
    frame = duan_frame(QuadratureModel(gains=[0.5], efficiency_signal=0.0), 1)
    assert math.isnan(frame["corrected_dB"].iloc[0])


def test_efficiency_table():
    table = efficiency_table([-2.56, -1.5, -1.2], 0.777)
    assert list(table.columns) == ["k", "measured_dB", "corrected_dB", "I_measured", "I_corrected"]
    assert table["k"].tolist() == [1, 2, 3]
    assert (table["corrected_dB"] < table["measured_dB"]).all()
    assert (table["I_corrected"] < table["I_measured"]).all()
    assert table["I_measured"].iloc[0] == pytest.approx(duan_from_db(-2.56))
