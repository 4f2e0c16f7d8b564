"""Homodyne detection with a shaped local oscillator.

An LO with spectral shape L selects a_L = sum_k c_k a_k, c_k = conj(<psi_k, L>),
plus whatever part of L lies outside the mode basis, which only sees vacuum.
"""

from collections.abc import Sequence

import numpy as np

from measurement.moments import quadrature_covariance
from schema.models import Beam, Quadrature
from schema.specs import ModeLabel, QuadratureModel
from spectral import SpectralField, orthonormality_error
from spectral.ops import inner_product

LO_NORM_TOLERANCE = 1e-8
BASIS_TOLERANCE = 1e-8


def lo_coefficients(lo_shape: SpectralField, mode_basis: Sequence[SpectralField]) -> np.ndarray:
    if abs(lo_shape.norm_squared() - 1.0) > LO_NORM_TOLERANCE:
        raise ValueError(f"LO shape must be normalized, |LO|^2 = {lo_shape.norm_squared():.12f}")
    error = orthonormality_error(mode_basis)
    if error > BASIS_TOLERANCE:
        raise ValueError(f"mode basis is not orthonormal (error {error:.3e})")
    return np.array([np.conj(inner_product(mode, lo_shape)) for mode in mode_basis])


def quadrature_weights(coefficients: np.ndarray, quadrature: Quadrature) -> np.ndarray:
    """Weights on (X_1..X_K, Y_1..Y_K) of the LO quadrature."""
    if quadrature == Quadrature.X:
        return np.concatenate([coefficients.real, -coefficients.imag])
    return np.concatenate([coefficients.imag, coefficients.real])


def lo_variance(
    covariance: np.ndarray, coefficients: np.ndarray, quadrature: Quadrature
) -> float:
    """w^T V w plus unit vacuum variance for the LO energy outside the basis."""
    weights = quadrature_weights(coefficients, quadrature)
    matched = float(np.sum(np.abs(coefficients) ** 2))
    return float(weights @ covariance @ weights) + (1.0 - matched)


def beam_covariance(model: QuadratureModel, beam: Beam, mode_count: int) -> np.ndarray:
    """(X_1..X_K, Y_1..Y_K) covariance of one beam's first K modes."""
    labels = [ModeLabel(beam=beam, order=k) for k in range(1, mode_count + 1)]
    blocks = [
        np.array([[quadrature_covariance(model, m, n, quad) for n in labels] for m in labels])
        for quad in (Quadrature.X, Quadrature.Y)
    ]
    zeros = np.zeros_like(blocks[0])
    return np.block([[blocks[0], zeros], [zeros, blocks[1]]])


def homodyne_variance(
    model: QuadratureModel,
    lo_shape: SpectralField,
    mode_basis: Sequence[SpectralField],
    quadrature: Quadrature,
    beam: Beam = Beam.SIGNAL,
) -> float:
    """Variance of the quadrature picked out by ``lo_shape`` on one beam."""
    if len(mode_basis) > model.mode_count:
        raise ValueError(
            f"{len(mode_basis)} basis modes for a {model.mode_count}-mode quadrature model"
        )
    coefficients = lo_coefficients(lo_shape, mode_basis)
    return lo_variance(beam_covariance(model, beam, len(mode_basis)), coefficients, quadrature)
