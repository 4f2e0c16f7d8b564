"""Inseparability criterion and detection-efficiency bookkeeping.

I_k = <D^2(X_s - X_i)> / 2 + <D^2(Y_s + Y_i)> / 2 in vacuum units; separable
states satisfy I_k >= 2, and the lossless two-mode squeezed value is 2 exp(-2 G_k).
"""

import math
from collections.abc import Sequence
from dataclasses import dataclass

import pandas as pd

from measurement.moments import quadrature_covariance, quadrature_variance
from schema.models import Beam, Quadrature
from schema.specs import ModeLabel, QuadratureModel

SEPARABLE_BOUND = 2.0


@dataclass(frozen=True)
class DuanResult:
    k: int
    value: float
    ratio_db: float


def to_db(ratio: float) -> float:
    return 10.0 * math.log10(ratio)


def from_db(value_db: float) -> float:
    return 10.0 ** (value_db / 10.0)


def duan_from_db(ratio_db: float) -> float:
    """I = 2 * 10^(dB / 10)."""
    return SEPARABLE_BOUND * from_db(ratio_db)


def duan_criterion(model: QuadratureModel, k: int) -> DuanResult:
    signal = ModeLabel(beam=Beam.SIGNAL, order=k)
    idler = ModeLabel(beam=Beam.IDLER, order=k)
    var_s = quadrature_variance(model, signal)
    var_i = quadrature_variance(model, idler)
    cov_x = quadrature_covariance(model, signal, idler, Quadrature.X)
    cov_y = quadrature_covariance(model, signal, idler, Quadrature.Y)
    difference_x = var_s + var_i - 2 * cov_x
    sum_y = var_s + var_i + 2 * cov_y
    # vacuum gives 2 for both joint variances
    value = difference_x / 2 + sum_y / 2
    return DuanResult(k=k, value=value, ratio_db=to_db(value / SEPARABLE_BOUND))


def efficiency_correct(measured_db: float, eta: float) -> float:
    """Undo vacuum admixture: V_src = (V_obs - 1 + eta) / eta on shot-noise units."""
    if not 0 < eta <= 1:
        raise ValueError(f"efficiency must lie in (0, 1], got {eta}")
    observed = from_db(measured_db)
    source = (observed - 1.0 + eta) / eta
    if source <= 0:
        raise ValueError(
            f"efficiency {eta} is too low for {measured_db} dB: "
            f"corrected variance {source:.3g} <= 0"
        )
    return to_db(source)


def infer_efficiency(measured_db: float, corrected_db: float) -> float:
    """eta = (1 - V_obs) / (1 - V_src) from one measured/corrected pair."""
    observed, source = from_db(measured_db), from_db(corrected_db)
    if math.isclose(source, 1.0):
        raise ValueError("a corrected value of 0 dB does not determine the efficiency")
    eta = (1.0 - observed) / (1.0 - source)
    if not 0 < eta <= 1:
        raise ValueError(
            f"pair ({measured_db}, {corrected_db}) dB implies unphysical eta={eta:.4f}"
        )
    return eta


def duan_frame(model: QuadratureModel, mode_count: int) -> pd.DataFrame:
    """k, I_k, dB and the efficiency-corrected dB, one row per mode pair.

    The correction uses the geometric mean of the two beams' efficiencies.
    """
    rows = []
    for k in range(1, mode_count + 1):
        result = duan_criterion(model, k)
        eta = math.sqrt(model.efficiency(Beam.SIGNAL, k) * model.efficiency(Beam.IDLER, k))
        try:
            corrected = efficiency_correct(result.ratio_db, eta) if eta > 0 else float("nan")
        except ValueError:
            corrected = float("nan")
        rows.append({"k": k, "I_k": result.value, "dB": result.ratio_db, "corrected_dB": corrected})
    return pd.DataFrame(rows)


def efficiency_table(measured_db: Sequence[float], eta: float) -> pd.DataFrame:
    """Measured dB values, their corrections at ``eta`` and the matching I values."""
    corrected = [efficiency_correct(value, eta) for value in measured_db]
    return pd.DataFrame(
        {
            "k": range(1, len(measured_db) + 1),
            "measured_dB": list(measured_db),
            "corrected_dB": corrected,
            "I_measured": [duan_from_db(v) for v in measured_db],
            "I_corrected": [duan_from_db(v) for v in corrected],
        }
    )
