"""Closed-form quadrature moments of the unseeded amplifier output.

Quadratures are X = a + a^dagger and Y = (a - a^dagger)/i, so vacuum has unit
variance. Detection loss mixes in vacuum: V -> eta V + (1 - eta).
"""

import math
from dataclasses import dataclass

import numpy as np

from schema.models import Beam, Quadrature
from schema.specs import ModeLabel, QuadratureModel


@dataclass(frozen=True)
class Moments:
    var_m: float
    var_n: float
    covar: float

    @property
    def correlation(self) -> float:
        return self.covar / math.sqrt(self.var_m * self.var_n)


def mode_labels(mode_count: int) -> list[ModeLabel]:
    """s1..sK followed by iK..i1, so partner modes sit on the anti-diagonal."""
    signal = [ModeLabel(beam=Beam.SIGNAL, order=k) for k in range(1, mode_count + 1)]
    idler = [ModeLabel(beam=Beam.IDLER, order=k) for k in range(mode_count, 0, -1)]
    return signal + idler


def quadrature_variance(model: QuadratureModel, label: ModeLabel) -> float:
    """eta (cosh 2G_k - 1) + 1, identical for X and Y."""
    eta = model.efficiency(label.beam, label.order)
    return eta * (math.cosh(2 * model.gain(label.order)) - 1.0) + 1.0


def quadrature_covariance(
    model: QuadratureModel, m: ModeLabel, n: ModeLabel, quadrature: Quadrature = Quadrature.X
) -> float:
    if m == n:
        return quadrature_variance(model, m)
    if m.order != n.order or m.beam == n.beam:
        return 0.0
    k = m.order
    amplitude = math.sqrt(
        model.efficiency(Beam.SIGNAL, k)
        * model.efficiency(Beam.IDLER, k)
        * model.lo_overlap(Beam.SIGNAL, k)
        * model.lo_overlap(Beam.IDLER, k)
    )
    covar = amplitude * math.sinh(2 * model.gain(k))
    return covar if quadrature == Quadrature.X else -covar


def analytic_moments(
    model: QuadratureModel, m: ModeLabel, n: ModeLabel, quadrature: Quadrature = Quadrature.X
) -> Moments:
    """Variances of m and n and their covariance for the chosen quadrature."""
    for label in (m, n):
        if label.order > model.mode_count:
            raise IndexError(f"{label} is outside the {model.mode_count}-mode model")
    return Moments(
        var_m=quadrature_variance(model, m),
        var_n=quadrature_variance(model, n),
        covar=quadrature_covariance(model, m, n, quadrature),
    )


def covariance_matrix(
    model: QuadratureModel, mode_count: int, quadrature: Quadrature = Quadrature.X
) -> np.ndarray:
    """Raw second moments <dO_m dO_n> in label order s1..sK, iK..i1."""
    labels = mode_labels(mode_count)
    return np.array(
        [[quadrature_covariance(model, m, n, quadrature) for n in labels] for m in labels]
    )


def normalize_covariance(raw: np.ndarray) -> np.ndarray:
    """C_mn = <dO_m dO_n> / sqrt(<dO_m^2> <dO_n^2>)."""
    scale = np.sqrt(np.diag(raw))
    return raw / np.outer(scale, scale)


def phase_space_covariance(model: QuadratureModel, mode_count: int) -> np.ndarray:
    """Full covariance in (X_1..X_2K, Y_1..Y_2K) ordering; X and Y are uncorrelated."""
    cov_x = covariance_matrix(model, mode_count, Quadrature.X)
    cov_y = covariance_matrix(model, mode_count, Quadrature.Y)
    zeros = np.zeros_like(cov_x)
    return np.block([[cov_x, zeros], [zeros, cov_y]])


def symplectic_eigenvalues(covariance: np.ndarray) -> np.ndarray:
    """Symplectic spectrum of a (x..., p...) ordered covariance; physical states have all >= 1."""
    n = covariance.shape[0] // 2
    omega = np.block([[np.zeros((n, n)), np.eye(n)], [-np.eye(n), np.zeros((n, n))]])
    eigenvalues = np.sort(np.abs(np.linalg.eigvals(1j * omega @ covariance)))
    return eigenvalues[::2]
