from pathlib import Path

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict

from measurement.covariance import CovarianceReport
from schema.models import MeasurementMethod, Quadrature


class CovarianceReportModel(BaseModel):
    """Full-precision JSON form of a CovarianceReport."""

    model_config = ConfigDict(extra="forbid")

    labels: list[str]
    method: MeasurementMethod
    sample_count: int
    c_x: list[list[float]]
    c_y: list[list[float]]
    raw_x: list[list[float]]
    raw_y: list[list[float]]
    se_x: list[list[float]] | None = None
    se_y: list[list[float]] | None = None

    @classmethod
    def from_report(cls, report: CovarianceReport) -> "CovarianceReportModel":
        return cls(
            labels=[str(label) for label in report.labels],
            method=report.method,
            sample_count=report.sample_count,
            c_x=report.c_x.tolist(),
            c_y=report.c_y.tolist(),
            raw_x=report.raw_x.tolist(),
            raw_y=report.raw_y.tolist(),
            se_x=None if report.se_x is None else report.se_x.tolist(),
            se_y=None if report.se_y is None else report.se_y.tolist(),
        )


def correlation_frame(report: CovarianceReport, quadrature: Quadrature) -> pd.DataFrame:
    labels = [str(label) for label in report.labels]
    return pd.DataFrame(report.correlation(quadrature), index=labels, columns=labels)


def render_table(report: CovarianceReport, quadrature: Quadrature, digits: int = 2) -> str:
    """Labelled C matrix as text; Monte Carlo reports also get the standard-error matrix."""
    frame = correlation_frame(report, quadrature)
    text = f"C_{quadrature.value} ({report.method.value})\n"
    text += frame.to_string(float_format=lambda v: f"{v:.{digits}f}")
    se = report.standard_error(quadrature)
    if se is not None:
        se_frame = pd.DataFrame(se, index=frame.index, columns=frame.columns)
        text += f"\n\nstandard error, {report.sample_count} samples\n"
        text += se_frame.to_string(float_format=lambda v: f"{v:.3f}")
    return text + "\n"


def write_report(report: CovarianceReport, out_dir: Path, stem: str) -> list[Path]:
    out_dir.mkdir(parents=True, exist_ok=True)
    json_path = out_dir / f"{stem}.json"
    json_path.write_text(CovarianceReportModel.from_report(report).model_dump_json(indent=2))
    table_path = out_dir / f"{stem}.txt"
    table_path.write_text(
        "\n".join(render_table(report, quadrature) for quadrature in Quadrature)
    )
    return [json_path, table_path]


def max_off_structure(report: CovarianceReport, quadrature: Quadrature) -> float:
    """Largest |C| outside the diagonal and anti-diagonal."""
    matrix = report.correlation(quadrature)
    size = matrix.shape[0]
    mask = ~(np.eye(size, dtype=bool) | np.fliplr(np.eye(size, dtype=bool)))
    return float(np.max(np.abs(matrix[mask]))) if mask.any() else 0.0
