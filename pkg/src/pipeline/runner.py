"""Experiment stages: decompose, iterate, measure, and all three chained."""

import json
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
import pandas as pd

from amplifier import SeededAmplifier
from core import settings
from core.errors import ConfigError, ConvergenceError
from iteration import ModeExtractionResult, default_seed, extract_all_modes
from iteration.trace import fit_decay_rate, iterate_errors, write_trace_csv
from jsf import JointSpectralKernel, count_islands
from jsf.io import write_intensity_grid, write_kernel
from measurement import build_covariance_matrix, phase_space_covariance, symplectic_eigenvalues
from measurement.duan import duan_frame, efficiency_table
from measurement.report import write_report
from pipeline.config import write_resolved_config
from pipeline.kernels import build_kernel, build_unfiltered_kernel
from schema import (
    ExperimentConfig,
    MeasurementMethod,
    NliKernelSpec,
    QuadratureModel,
    sweep_label,
)
from schmidt import SchmidtDecomposition, decompose, subspace_overlap
from schmidt.io import write_decomposition
from spectral import SpectralField, overlap
from spectral.io import FLOAT_FORMAT, read_field_csv, write_field_csv

logger = logging.getLogger(__name__)


@dataclass
class SweepPoint:
    G: float
    results: list[ModeExtractionResult]
    summary: pd.DataFrame


@dataclass
class StageArtifacts:
    stage: str
    paths: list[Path] = field(default_factory=list)
    summary: dict = field(default_factory=dict)


def _write_csv(frame: pd.DataFrame, path: Path) -> Path:
    frame.to_csv(path, index=False, float_format=FLOAT_FORMAT)
    return path


class ExperimentRunner:
    """Runs the stages of one ExperimentConfig into an output directory.

    The kernel at the configured G is built once and shared by all stages.
    """

    def __init__(self, config: ExperimentConfig, out_dir: Path, threads: int | None = None):
        self.config = config
        self.out_dir = out_dir
        self.threads = threads or settings.THREADS
        self._kernel: JointSpectralKernel | None = None
        self._decomposition: SchmidtDecomposition | None = None

    @property
    def kernel(self) -> JointSpectralKernel:
        if self._kernel is None:
            try:
                self._kernel = build_kernel(self.config.kernel)
            except ValueError as exc:
                raise ConfigError(
                    f"cannot build the kernel of '{self.config.name}': {exc}"
                ) from exc
        return self._kernel

    @property
    def decomposition(self) -> SchmidtDecomposition:
        if self._decomposition is None:
            self._decomposition = decompose(self.kernel, self.config.max_modes)
        return self._decomposition

    def _stage_dir(self, name: str) -> Path:
        path = self.out_dir / name
        path.mkdir(parents=True, exist_ok=True)
        write_resolved_config(self.config, self.out_dir)
        return path

    def run_decompose(self) -> StageArtifacts:
        out = self._stage_dir("decompose")
        artifacts = StageArtifacts("decompose")
        islands = count_islands(self.kernel)
        artifacts.paths.extend(write_kernel(self.kernel, out, island_count=islands))
        artifacts.paths.append(write_intensity_grid(self.kernel, out / "intensity_grid.csv"))
        artifacts.paths.extend(
            write_decomposition(self.decomposition, out / "modes", limit=self.config.mode_count)
        )
        artifacts.summary = {
            "retained_modes": self.decomposition.mode_count,
            "island_count": islands,
            "r": self.decomposition.r[: self.config.mode_count].tolist(),
        }
        if isinstance(self.config.kernel, NliKernelSpec):
            unfiltered = build_unfiltered_kernel(self.config.kernel)
            report = {
                "islands_full_kernel": count_islands(unfiltered),
                "islands_after_cwdm": islands,
                "discarded_energy": self.kernel.discarded_energy,
            }
            path = out / "islands.json"
            path.write_text(json.dumps(report, indent=2))
            artifacts.paths.append(path)
            artifacts.summary.update(report)
        logger.info(f"Decompose stage wrote {len(artifacts.paths)} files to {out}")
        return artifacts

    def _seed_for(self, kernel: JointSpectralKernel) -> SpectralField:
        if self.config.seed_field is None:
            return default_seed(kernel)
        path = Path(self.config.seed_field)
        if not path.is_file():
            raise ConfigError(f"seed file {path} does not exist")
        try:
            seed = read_field_csv(path)
        except ValueError as exc:
            raise ConfigError(f"seed file {path} is not a spectral field: {exc}") from exc
        if seed.grid != kernel.signal_grid:
            raise ConfigError(f"seed file {self.config.seed_field} is not on the signal grid")
        return seed

    def _iterate_point(self, base: JointSpectralKernel, G: float, out: Path) -> SweepPoint:
        kernel = base.with_strength(G)
        dec = decompose(kernel, self.config.max_modes)
        amplifier = SeededAmplifier(dec)
        seed = self._seed_for(kernel)
        results = extract_all_modes(amplifier, self.config.mode_count, self.config.iteration, seed)

        out.mkdir(parents=True, exist_ok=True)
        rows = []
        for result in results:
            write_trace_csv(result, out / f"trace_{result.mode_index}.csv")
            if result.mode is not None:
                write_field_csv(result.mode, out / f"mode_{result.mode_index}.csv")
            rows.append(_summary_row(G, result, dec))
        summary = pd.DataFrame(rows)
        summary["mode_number"] = _mode_numbers(summary["power_gain"].to_numpy())
        leading = dec.gains[0]
        summary["oracle_mode_number"] = summary["oracle_G_k"] / leading if leading > 0 else np.nan
        if self.config.iteration.record_iterates and results[0].iterates and dec.mode_count > 1:
            errors = iterate_errors(results[0].iterates, dec.mode(1))
            try:
                summary.loc[0, "decay_rate"] = fit_decay_rate(errors)
                summary.loc[0, "predicted_rate"] = math.log(
                    math.cosh(dec.gains[1]) / math.cosh(dec.gains[0])
                )
            except ValueError as exc:
                logger.warning(f"G={G}: no decay fit ({exc})")
        _write_csv(summary, out / "summary.csv")
        return SweepPoint(G, results, summary)

    def run_iterate(self) -> StageArtifacts:
        out = self._stage_dir("iterate")
        artifacts = StageArtifacts("iterate")
        strengths = self.config.strengths
        base = self.kernel
        with ThreadPoolExecutor(max_workers=self.threads) as pool:
            points = list(
                pool.map(lambda g: self._iterate_point(base, g, out / sweep_label(g)), strengths)
            )

        sweep = pd.concat([p.summary for p in points], ignore_index=True)
        artifacts.paths.append(_write_csv(sweep, out / "gain_sweep.csv"))
        numbers = sweep.pivot(index="G", columns="k", values="mode_number").reset_index()
        numbers.columns = ["G"] + [f"r{k}/r1" for k in numbers.columns[1:]]
        artifacts.paths.append(_write_csv(numbers, out / "mode_numbers.csv"))
        artifacts.summary = {
            "unreliable": sweep.loc[~sweep["reliable"], ["G", "k"]].to_dict("records"),
            "min_oracle_overlap": float(sweep["oracle_overlap"].min()),
        }

        required = self.config.iteration.required_modes
        failed = [
            (p.G, r.mode_index)
            for p in points
            for r in p.results
            if r.mode_index <= required and not r.converged
        ]
        if failed:
            raise ConvergenceError(f"required modes did not converge: {failed}")
        logger.info(f"Iterate stage finished {len(points)} sweep point(s) into {out}")
        return artifacts

    def quadrature_model(self) -> QuadratureModel:
        m = self.config.measurement
        if m.power_gains is not None:
            gains = np.arccosh(np.sqrt(m.power_gains)).tolist()
        else:
            gains = self.decomposition.gains[: self.config.mode_count].tolist()
        count = len(gains)

        def per_mode(value: float | list[float]) -> float | list[float]:
            return value if isinstance(value, float | int) else list(value)[:count]

        return QuadratureModel(
            gains=gains,
            efficiency_signal=per_mode(m.efficiency_signal),
            efficiency_idler=per_mode(m.efficiency_idler),
            lo_overlap_signal=per_mode(m.lo_overlap_signal),
            lo_overlap_idler=per_mode(m.lo_overlap_idler),
        )

    def rng_seed(self) -> int:
        for candidate in (self.config.measurement.rng_seed, self.config.rng_seed):
            if candidate is not None:
                return candidate
        return settings.DEFAULT_SEED

    def run_measure(self) -> StageArtifacts:
        out = self._stage_dir("measure")
        artifacts = StageArtifacts("measure")
        m = self.config.measurement
        model = self.quadrature_model()
        count = min(self.config.mode_count, model.mode_count)

        analytic = build_covariance_matrix(model, count)
        artifacts.paths.extend(write_report(analytic, out, "covariance_analytic"))
        summary: dict = {
            "anti_diagonal_x": analytic.anti_diagonal().tolist(),
            "min_symplectic_eigenvalue": float(
                symplectic_eigenvalues(phase_space_covariance(model, count)).min()
            ),
        }
        if m.samples:
            sampled = build_covariance_matrix(
                model,
                count,
                MeasurementMethod.MONTE_CARLO,
                samples=m.samples,
                rng_seed=self.rng_seed(),
                batches=m.batches,
            )
            artifacts.paths.extend(write_report(sampled, out, "covariance_monte_carlo"))
            summary["max_standard_error"] = float(max(sampled.se_x.max(), sampled.se_y.max()))

        artifacts.paths.append(_write_csv(duan_frame(model, count), out / "duan.csv"))
        if m.measured_db:
            eta = m.correction_efficiency
            if eta is None:
                raise ConfigError("measured_db needs measurement.correction_efficiency")
            artifacts.paths.append(
                _write_csv(efficiency_table(m.measured_db, eta), out / "efficiency.csv")
            )
        path = out / "measure_summary.json"
        path.write_text(json.dumps(summary, indent=2))
        artifacts.paths.append(path)
        artifacts.summary = summary
        logger.info(f"Measure stage wrote {len(artifacts.paths)} files to {out}")
        return artifacts

    def run_all(self) -> list[StageArtifacts]:
        return [self.run_decompose(), self.run_iterate(), self.run_measure()]


def _summary_row(G: float, result: ModeExtractionResult, dec: SchmidtDecomposition) -> dict:
    k = result.mode_index
    oracle_overlap = float("nan")
    oracle_gain = float("nan")
    oracle_G = float("nan")
    if k <= dec.mode_count:
        oracle_gain = float(dec.power_gains[k - 1])
        oracle_G = float(dec.gains[k - 1])
        if result.mode is not None:
            if dec.is_degenerate(k):
                orders = sorted({o for pair in dec.degenerate_pairs if k in pair for o in pair})
                oracle_overlap = math.sqrt(subspace_overlap(dec, orders, [result.mode]))
            else:
                oracle_overlap = overlap(result.mode, dec.mode(k))
    return {
        "G": G,
        "k": k,
        "power_gain": result.power_gain,
        "oracle_power_gain": oracle_gain,
        "oracle_G_k": oracle_G,
        "oracle_overlap": oracle_overlap,
        "iterations": result.iterations_used,
        "converged": result.converged,
        "degenerate": result.degenerate,
        "reliable": result.reliable,
        "failure": result.failure or "",
    }


def _mode_numbers(power_gains: np.ndarray) -> np.ndarray:
    """r_k / r_1 where both gains exceed unity, NaN elsewhere."""
    ratios = np.full(power_gains.shape, np.nan)
    if power_gains.size == 0 or power_gains[0] <= 1:
        return ratios
    valid = power_gains > 1
    gains = np.arccosh(np.sqrt(power_gains[valid]))
    ratios[valid] = gains / math.acosh(math.sqrt(power_gains[0]))
    return ratios
