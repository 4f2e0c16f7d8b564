"""Covariance-matrix assembly: closed form, or sampled the way the experiment measures it.

Same-beam entries come from three LO settings (m, n and the superposed
(m + n)/sqrt(2)); cross-beam entries from the variance of the difference
photocurrent. Both routes reduce to the same second moments in expectation.
"""

import logging
from dataclasses import dataclass

import numpy as np
from scipy import linalg

from measurement.moments import covariance_matrix, mode_labels, normalize_covariance
from schema.models import MeasurementMethod, Quadrature
from schema.specs import ModeLabel, QuadratureModel

logger = logging.getLogger(__name__)

MIN_SAMPLES = 100
DEFAULT_BATCHES = 50


@dataclass(frozen=True, eq=False)
class CovarianceReport:
    labels: list[ModeLabel]
    c_x: np.ndarray
    c_y: np.ndarray
    raw_x: np.ndarray
    raw_y: np.ndarray
    method: MeasurementMethod
    sample_count: int = 0
    se_x: np.ndarray | None = None
    se_y: np.ndarray | None = None

    @property
    def mode_count(self) -> int:
        return len(self.labels) // 2

    def correlation(self, quadrature: Quadrature) -> np.ndarray:
        return self.c_x if quadrature == Quadrature.X else self.c_y

    def standard_error(self, quadrature: Quadrature) -> np.ndarray | None:
        return self.se_x if quadrature == Quadrature.X else self.se_y

    def anti_diagonal(self, quadrature: Quadrature = Quadrature.X) -> np.ndarray:
        """C(s_k, i_k) for k = 1..K."""
        matrix = self.correlation(quadrature)
        size = len(self.labels)
        return np.array([matrix[k, size - 1 - k] for k in range(self.mode_count)])


def batch_generator(seed: int, batch: int) -> np.random.Generator:
    """Counter-based stream for one batch; depends on (seed, batch) only."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=(batch,))))


def _batch_sizes(samples: int, batches: int) -> list[int]:
    base, extra = divmod(samples, batches)
    return [base + (1 if b < extra else 0) for b in range(batches)]


def _estimate(samples: np.ndarray, labels: list[ModeLabel]) -> tuple[np.ndarray, np.ndarray]:
    """Raw and normalized covariance from joint-quadrature measurements on one batch."""
    variances = samples.var(axis=0, ddof=1)
    size = len(labels)
    raw = np.diag(variances)
    for m in range(size):
        for n in range(m + 1, size):
            if labels[m].beam == labels[n].beam:
                superposed = ((samples[:, m] + samples[:, n]) / np.sqrt(2)).var(ddof=1)
                covar = superposed - (variances[m] + variances[n]) / 2
            else:
                difference = (samples[:, m] - samples[:, n]).var(ddof=1)
                covar = (variances[m] + variances[n] - difference) / 2
            raw[m, n] = raw[n, m] = covar
    return raw, np.clip(normalize_covariance(raw), -1.0, 1.0)


def _sample_quadrature(
    covariance: np.ndarray,
    labels: list[ModeLabel],
    samples: int,
    seed: int,
    batch_offset: int,
    batches: int,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    factor = linalg.cholesky(covariance, lower=True)
    raws, corrs = [], []
    for b, size in enumerate(_batch_sizes(samples, batches)):
        rng = batch_generator(seed, batch_offset + b)
        draws = rng.standard_normal((size, len(labels))) @ factor.T
        raw, corr = _estimate(draws, labels)
        raws.append(raw)
        corrs.append(corr)
    raw_stack, corr_stack = np.stack(raws), np.stack(corrs)
    standard_error = corr_stack.std(axis=0, ddof=1) / np.sqrt(batches)
    return raw_stack.mean(axis=0), corr_stack.mean(axis=0), standard_error


def build_covariance_matrix(
    model: QuadratureModel,
    mode_count: int,
    method: MeasurementMethod = MeasurementMethod.ANALYTIC,
    samples: int = 0,
    rng_seed: int | None = None,
    batches: int = DEFAULT_BATCHES,
) -> CovarianceReport:
    """2K x 2K X and Y correlation matrices in label order s1..sK, iK..i1.

    Monte Carlo draws zero-mean Gaussian quadratures with the analytic
    covariance, in ``batches`` reproducible streams; standard errors are the
    spread of the batch estimates.
    """
    if not 1 <= mode_count <= model.mode_count:
        raise ValueError(f"mode_count must lie in 1..{model.mode_count}, got {mode_count}")
    labels = mode_labels(mode_count)
    raw_x = covariance_matrix(model, mode_count, Quadrature.X)
    raw_y = covariance_matrix(model, mode_count, Quadrature.Y)

    if method == MeasurementMethod.ANALYTIC:
        return CovarianceReport(
            labels=labels,
            c_x=normalize_covariance(raw_x),
            c_y=normalize_covariance(raw_y),
            raw_x=raw_x,
            raw_y=raw_y,
            method=method,
        )

    if samples < MIN_SAMPLES:
        raise ValueError(f"Monte Carlo needs at least {MIN_SAMPLES} samples, got {samples}")
    if rng_seed is None:
        raise ValueError("Monte Carlo sampling requires a fixed rng_seed")
    if not 2 <= batches <= samples // 2:
        raise ValueError(f"batches must lie in 2..{samples // 2}, got {batches}")

    sampled_x = _sample_quadrature(raw_x, labels, samples, rng_seed, 0, batches)
    sampled_y = _sample_quadrature(raw_y, labels, samples, rng_seed, batches, batches)
    logger.info(
        f"Sampled {samples} shots per quadrature in {batches} batches; "
        f"max se {max(sampled_x[2].max(), sampled_y[2].max()):.4f}"
    )
    return CovarianceReport(
        labels=labels,
        c_x=sampled_x[1],
        c_y=sampled_y[1],
        raw_x=sampled_x[0],
        raw_y=sampled_y[0],
        method=method,
        sample_count=samples,
        se_x=sampled_x[2],
        se_y=sampled_y[2],
    )
